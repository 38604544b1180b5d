"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad parameters,
3 a resource cap was hit.  Errors print a single ``error: ...`` line on
stderr.  JSON is the canonical output; ``pretty`` and ``csv`` are rendered
from the same report dictionary.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from typing import Callable

import numpy as np

from . import codes, curves
from .charsum import gaussian_period, gaussian_period_closed_form_N2
from .errors import InternalCheckError, ParameterError, TwoZeroError, WorkCapError
from .ffield import DEFAULT_SIZE_CAP, FieldTower, build_field, format_poly, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_CAP = 0, 1, 2, 3
WORK_CAP_ENV = "TWOZERO_WORK_CAP"
FULL_SWEEP_MAX_R = 512
SAMPLED_PAIRS = 10_000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParameterError(message)


# ---------------------------------------------------------------------------
# helpers

def _tower(cfg) -> FieldTower:
    modulus = parse_poly(cfg.modulus) if cfg.modulus else None
    return build_field(cfg.p, cfg.s, cfg.m, modulus=modulus, size_cap=DEFAULT_SIZE_CAP)


def _work_cap(cfg) -> int | None:
    if cfg.work_cap is not None:
        return cfg.work_cap
    env = os.environ.get(WORK_CAP_ENV)
    return int(env) if env else None


def _need(cfg, *names):
    missing = [n for n in names if getattr(cfg, n, None) is None]
    if missing:
        raise ParameterError("missing " + ", ".join("--" + n for n in missing))


def _params(cfg) -> codes.CodeParams:
    _need(cfg, "h", "e")
    return codes.build_code_params(_tower(cfg), cfg.h, cfg.e)


def _field_json(t: FieldTower) -> dict:
    return {"p": t.p, "s": t.s, "m": t.m, "q": t.q, "r": t.r,
            "modulus": format_poly(t.params.modulus)}


def _value_json(v) -> dict:
    out = {"exact": v.to_json(), "rational": v.is_rational()}
    if v.is_rational():
        out["value"] = v.rational_value()
    return out


_TOKEN = re.compile(r"^(a|b)\^(-?\d+)$")


def parse_element(t: FieldTower, token: str, e: int | None = None) -> int:
    """``a^k`` is alpha^k, ``b^k`` is beta^k with beta = alpha^((r-1)/e); plain ints are codes."""
    token = token.strip()
    m = _TOKEN.match(token)
    if m:
        k = int(m.group(2))
        if m.group(1) == "a":
            return t.exp(k)
        if e is None or (t.r - 1) % e:
            raise ParameterError("b^k needs e dividing r - 1")
        return t.exp(k * (t.r - 1) // e)
    try:
        x = int(token)
    except ValueError:
        raise ParameterError(f"cannot parse field element {token!r}") from None
    if not 0 <= x < t.r:
        raise ParameterError(f"element code {x} outside [0, {t.r})")
    return x


# ---------------------------------------------------------------------------
# commands; each returns (report, exit code)

def cmd_enumerate(cfg):
    params = _params(cfg)
    dist = codes.enumerate_weight_distribution(params, work_cap=_work_cap(cfg), jobs=cfg.jobs)
    report = {"params": params.describe(), "field": _field_json(params.tower)}
    report.update(dist.to_json())
    report["dimension"] = codes.code_dimension(params, dist)
    report["dimension_is_2m"] = report["dimension"] == 2 * params.tower.m
    report["min_distance"] = dist.min_distance()
    report["enumerator"] = dist.enumerator()
    return report, EXIT_OK


def _table2_json(params):
    return [{"value": int(v), "frequency": f} for v, f in codes.table2_rows(params)]


def cmd_predict(cfg):
    params = _params(cfg)
    codes.require_theorem_regime(params)
    dist = codes.predict_table1(params)
    report = {"params": params.describe(), "field": _field_json(params.tower)}
    report.update(dist.to_json())
    report["min_distance"] = dist.min_distance()
    report["enumerator"] = dist.enumerator()
    report["table1_rows"] = [{"weight": w, "frequency": c} for w, c in codes.table1_rows(params)]
    report["table2_rows"] = _table2_json(params)
    report["partition"] = {lab.value: c for lab, c in codes.predict_partition_counts(params).items()}
    return report, EXIT_OK


def parse_perturbation(text: str):
    """``weight:ROW:DELTA`` or ``freq:ROW:DELTA``; row indexes the seven-row table."""
    try:
        kind, row, delta = text.split(":")
        row, delta = int(row), int(delta)
    except ValueError:
        raise ParameterError(f"bad perturbation {text!r}") from None
    if kind not in ("weight", "freq") or not 0 <= row < 7:
        raise ParameterError(f"bad perturbation {text!r}")

    def hook(rows):
        rows = list(rows)
        w, c = rows[row]
        rows[row] = (w + delta, c) if kind == "weight" else (w, c + delta)
        return rows
    return hook


def _check(checks, name, ok, **detail):
    checks.append({"name": name, "pass": bool(ok), **detail})


def run_verify(params: codes.CodeParams, table1_hook: Callable | None = None,
               work_cap: int | None = None, jobs: int | None = None) -> dict:
    """Every cross-check available at these parameters, as a JSON-ready report."""
    t = params.tower
    r = t.r
    checks: list[dict] = []

    dist = codes.enumerate_weight_distribution(params, work_cap=work_cap, jobs=jobs)
    _check(checks, "total_count", dist.total == r * r, total=dist.total)
    dim = codes.code_dimension(params, dist)
    _check(checks, "dimension_2m", dim == 2 * t.m, dimension=dim)

    # formula route against direct counting
    if r <= FULL_SWEEP_MAX_R:
        z_direct = codes.zero_count_table(params, work_cap=work_cap, jobs=jobs)
        z_formula = codes.zero_count_formula_table(params, work_cap=work_cap, jobs=jobs)
        mism = int(np.count_nonzero(z_direct != z_formula))
        _check(checks, "zero_count_formula_vs_direct", mism == 0, pairs=r * r, mismatches=mism)
    else:
        rng = np.random.default_rng(0)
        pairs = rng.integers(0, r, size=(SAMPLED_PAIRS, 2))
        mism = sum(codes.zero_count_formula(params, int(a), int(b))
                   != codes.zero_count_direct(params, int(a), int(b)) for a, b in pairs)
        _check(checks, "zero_count_formula_vs_direct", mism == 0,
               pairs=SAMPLED_PAIRS, sampled=True, mismatches=int(mism))

    regime = params.in_theorem_regime
    if regime:
        rows = codes.table1_rows(params)
        if table1_hook is not None:
            rows = table1_hook(rows)
        predicted = codes.distribution_from_rows(params, rows)
        _check(checks, "weight_distribution_vs_table1", dist == predicted,
               enumerated=dist.to_json()["counts"], predicted=predicted.to_json()["counts"])
        _check(checks, "min_distance", dist.min_distance() == predicted.min_distance(),
               enumerated=dist.min_distance(), predicted=predicted.min_distance())

        census = codes.y_census(params, work_cap=work_cap, jobs=jobs)
        pred2 = codes.predict_table2(params)
        _check(checks, "y_census_vs_table2", dict(census) == pred2,
               census={str(k): v for k, v in sorted(census.items(), key=lambda kv: str(kv[0]))})

        part = codes.partition_census(params, jobs=jobs)
        pred_part = codes.predict_partition_counts(params)
        _check(checks, "partition_census", part == pred_part and sum(part.values()) == r * r,
               census={lab.value: c for lab, c in part.items()})

        j0, j3 = curves.aux_curves(params)
        n0 = curves.count_quadric_pair(t, j0)
        n3 = curves.count_quadric_pair(t, j3)
        s0, s3 = curves.count_S0_S3_direct(params)
        e1 = curves.WeierstrassCurve.over(t, 0, 0, 1)
        e3 = curves.WeierstrassCurve.over(t, 0, 0, t.power(t.alpha, 3))
        ne1 = curves.count_weierstrass(t, e1)
        ne3 = curves.count_weierstrass(t, e3)
        twist = curves.count_weierstrass(t, curves.quadratic_twist(t, e1, t.alpha))
        _check(checks, "eq3_J0_plus_J3", n0.total + n3.total == 2 * (r + 1),
               J0=n0.total, J3=n3.total)
        _check(checks, "eq4_S0", 8 * s0 == n0.total - 16, S0=s0)
        _check(checks, "eq5_S3", 8 * s3 == n3.total - 4, S3=s3)
        _check(checks, "S0_plus_S3", 4 * (s0 + s3) == r - 9)
        _check(checks, "J0_vs_y2_x3_plus_1", n0.total == ne1.total, weierstrass=ne1.total)
        _check(checks, "J3_vs_y2_x3_plus_alpha3", n3.total == ne3.total, weierstrass=ne3.total)
        _check(checks, "twist_sum", ne1.total + twist.total == 2 * (r + 1), twist=twist.total)
        _check(checks, "hasse", all(c.hasse_ok(r) for c in (n0, n3, ne1, ne3, twist)))
        b = params.beta
        shifts = [1, b, t.mul(b, b)]
        f1 = curves.explore_family6(t, 3, 2, shifts, [1, 1, 1])
        fa = curves.explore_family6(t, 3, 2, shifts, [t.alpha] * 3)
        _check(checks, "family6_unit_1", f1 == 8 * s0 + 12, count=f1)
        _check(checks, "family6_unit_alpha", fa == 8 * s3, count=fa)

    return {"params": params.describe(), "field": _field_json(t),
            "theorem_regime": regime, "checks": checks,
            "all_pass": all(c["pass"] for c in checks)}


def cmd_verify(cfg):
    params = _params(cfg)
    hook = parse_perturbation(cfg.perturb_table1) if cfg.perturb_table1 else None
    report = run_verify(params, table1_hook=hook, work_cap=_work_cap(cfg), jobs=cfg.jobs)
    return report, EXIT_OK if report["all_pass"] else EXIT_FAIL


def cmd_gauss(cfg):
    _need(cfg, "N")
    t = _tower(cfg)
    N = cfg.N
    periods = [gaussian_period(t, N, i) for i in range(N)]
    total = sum((v for v in periods[1:]), periods[0])
    report = {"field": _field_json(t), "N": N,
              "periods": [{"i": i, **_value_json(v)} for i, v in enumerate(periods)],
              "sum_is_minus_1": total.is_rational() and total.rational_value() == -1}
    if N == 2:
        try:
            eta0, eta1 = gaussian_period_closed_form_N2(t.p, t.s, t.m)
        except ParameterError as exc:
            report["closed_form"] = {"available": False, "reason": str(exc)}
        else:
            agrees = all(v.is_rational() and v.rational_value() == c
                         for v, c in zip(periods, (eta0, eta1)))
            report["closed_form"] = {"available": True, "eta0": str(eta0), "eta1": str(eta1),
                                     "agrees": agrees}
    return report, EXIT_OK


def cmd_curves(cfg):
    params = _params(cfg)
    codes.require_partition_regime(params)
    t = params.tower
    r = t.r
    j0, j3 = curves.aux_curves(params)
    n0 = curves.count_quadric_pair(t, j0)
    n3 = curves.count_quadric_pair(t, j3)
    e1 = curves.WeierstrassCurve.over(t, 0, 0, 1)
    tw = curves.quadratic_twist(t, e1, t.alpha)
    ne1, ntw = curves.count_weierstrass(t, e1), curves.count_weierstrass(t, tw)
    s0, s3 = curves.count_S0_S3_direct(params)
    report = {
        "field": _field_json(t),
        "params": params.describe(),
        "curves": [n0.to_json("J0", r), n3.to_json("J3", r),
                   ne1.to_json("y^2 = x^3 + 1", r), ntw.to_json("y^2 = x^3 + alpha^3", r)],
        "J0_plus_J3": n0.total + n3.total,
        "two_r_plus_2": 2 * (r + 1),
        "twist_sum": ne1.total + ntw.total,
        "S0": s0,
        "S3": s3,
        "S0_from_J0": str(Fraction(n0.total - 16, 8)),
        "S3_from_J3": str(Fraction(n3.total - 4, 8)),
    }
    return report, EXIT_OK


def cmd_explore(cfg):
    _need(cfg, "e", "f")
    t = _tower(cfg)
    e = cfg.e
    shifts = ([parse_element(t, tok, e) for tok in cfg.shifts.split(",")] if cfg.shifts
              else [parse_element(t, f"b^{i}", e) for i in range(e)])
    units = ([parse_element(t, tok, e) for tok in cfg.units.split(",")] if cfg.units
             else [1] * e)
    count = curves.explore_family6(t, e, cfg.f, shifts, units)
    return {"field": _field_json(t), "e": e, "f": cfg.f, "shifts": shifts, "units": units,
            "count": count}, EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "predict": cmd_predict,
    "verify": cmd_verify,
    "gauss": cmd_gauss,
    "curves": cmd_curves,
    "explore": cmd_explore,
}


# ---------------------------------------------------------------------------
# rendering

def _render_pretty(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines += _render_pretty(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines += _render_pretty(v, indent + 1)
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, obj


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "pretty":
        return "\n".join(_render_pretty(report)) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "counts" in report:
        writer.writerow(["weight", "frequency"])
        writer.writerows(report["counts"].items())
    else:
        writer.writerow(["key", "value"])
        writer.writerows(_flatten(report))
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, required=True)
    common.add_argument("--s", type=int, default=1)
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--h", type=int)
    common.add_argument("--e", type=int)
    common.add_argument("--modulus", help="primitive modulus, constant term first, e.g. 3,1,1")
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--work-cap", type=int, dest="work_cap")
    common.add_argument("--jobs", type=int)

    parser = _Parser(prog="twozero", description="Weight distributions of two-zero dual cyclic codes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("enumerate", parents=[common], help="exact weight distribution by enumeration")
    sub.add_parser("predict", parents=[common], help="closed-form tables (e = 3, gcd = 2)")
    v = sub.add_parser("verify", parents=[common], help="run every cross-check")
    v.add_argument("--perturb-table1", dest="perturb_table1", metavar="KIND:ROW:DELTA",
                   help="test hook: shift one closed-form constant before comparing")
    g = sub.add_parser("gauss", parents=[common], help="Gaussian periods of order N")
    g.add_argument("--N", type=int)
    sub.add_parser("curves", parents=[common], help="auxiliary curve counts")
    x = sub.add_parser("explore", parents=[common], help="count points on the general family")
    x.add_argument("--f", type=int)
    x.add_argument("--shifts", help="comma list of elements: code, a^k or b^k")
    x.add_argument("--units", help="comma list of elements: code, a^k or b^k")
    return parser


def main(argv=None) -> int:
    try:
        cfg = build_parser().parse_args(argv)
        report, code = COMMANDS[cfg.command](cfg)
        text = render(report, cfg.format)
    except WorkCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalCheckError as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParameterError, TwoZeroError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
