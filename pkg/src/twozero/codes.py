"""The codes C(q, m, h, e) from the trace representation, and their census.

``c(a, b)_i = Tr_{r/q}(a g^i + b (beta g)^i)`` for ``0 <= i < n`` where
``g = alpha^((q-1)/h)``, ``beta = alpha^((r-1)/e)`` and ``n = h(r-1)/(q-1)``.

Three independent views of the weight of ``c(a, b)`` live here:

* counting zero coordinates directly (:func:`zero_count_direct`,
  :func:`enumerate_weight_distribution`),
* the character-sum expression for the zero count
  (:func:`zero_count_formula`, :func:`y_value`),
* the closed-form tables valid for ``e = 3`` and
  ``gcd(m, e(q-1)/h) = 2`` (:func:`predict_table1`, :func:`predict_table2`).

Whole-code sweeps are vectorized over ``a`` and split into blocks over
``b``; blocks are independent and can be spread over threads with
``jobs``.  Merging is plain addition, so results do not depend on ``jobs``.
"""
from __future__ import annotations

import enum
import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .charsum import CyclotomicIntegerValue, gaussian_period_closed_form_N2
from .errors import InternalCheckError, ParameterError, WorkCapError
from .ffield import FieldTower, cyclotomic_class, prime_factors

DEFAULT_WORK_CAP = 2 ** 34
_BLOCK_ELEMS = 2 ** 22  # elements per temporary array in the sweeps


@dataclass(frozen=True, eq=False)
class CodeParams:
    tower: FieldTower
    h: int
    e: int
    n: int
    g: int
    beta: int
    f: int

    @property
    def g_log(self) -> int:
        """Exponent of ``g`` in base alpha, i.e. ``(q-1)/h``."""
        return (self.tower.q - 1) // self.h

    @property
    def beta_log(self) -> int:
        return (self.tower.r - 1) // self.e

    @property
    def k(self) -> int:
        return 2 * self.tower.m

    @property
    def in_theorem_regime(self) -> bool:
        return not _regime_violations(self)

    def describe(self) -> dict:
        t = self.tower
        return {"p": t.p, "s": t.s, "m": t.m, "q": t.q, "r": t.r,
                "h": self.h, "e": self.e, "n": self.n, "f": self.f}


def build_code_params(tower: FieldTower, h: int, e: int) -> CodeParams:
    q, r = tower.q, tower.r
    if h < 1 or e < 1:
        raise ParameterError("h and e must be positive")
    if h % e:
        raise ParameterError("e does not divide h")
    if (q - 1) % h:
        raise ParameterError(f"h = {h} does not divide q - 1 = {q - 1}")
    n = h * (r - 1) // (q - 1)
    g = tower.exp((q - 1) // h)
    beta = tower.exp((r - 1) // e)
    f = math.gcd(tower.m, e * (q - 1) // h)
    params = CodeParams(tower, h, e, n, g, beta, f)

    # executed, not assumed
    if not _has_order(tower, g, n):
        raise InternalCheckError(f"g does not have order n = {n}")
    if not _has_order(tower, beta, e):
        raise InternalCheckError(f"beta does not have order e = {e}")
    if not tower.in_subfield(beta):
        raise InternalCheckError("beta is not in GF(q)")
    if tower.log(beta) % params.g_log:
        raise InternalCheckError("beta is not a power of g")
    if n * params.g_log != r - 1:
        raise InternalCheckError("n (q-1)/h != r - 1")
    return params


def _has_order(tower: FieldTower, x: int, order: int) -> bool:
    if tower.power(x, order) != 1:
        return False
    return all(tower.power(x, order // ell) != 1 for ell in prime_factors(order))


# ---------------------------------------------------------------------------
# codewords

def _row_powers(params: CodeParams) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(params.n, dtype=np.int64)
    t = params.tower
    return t.exp(params.g_log * i), t.exp((params.g_log + params.beta_log) * i)


def codeword(params: CodeParams, a: int, b: int) -> np.ndarray:
    """Coordinates of ``c(a, b)`` as GF(r) codes lying in GF(q)."""
    t = params.tower
    gp, bgp = _row_powers(params)
    return t.trace_q(t.add(t.mul(a, gp), t.mul(b, bgp)))


def hamming_weight(word) -> int:
    return int(np.count_nonzero(np.asarray(word)))


def zero_count_direct(params: CodeParams, a: int, b: int) -> int:
    """``#{x in <g> : Tr(a x + beta^(log_g x) b x) = 0}``."""
    t = params.tower
    xs = cyclotomic_class(t, params.g_log, 0)
    log_g = (t.log(xs) // params.g_log) % params.n
    fx = t.add(t.mul(a, xs), t.mul(t.mul(t.exp(params.beta_log * log_g), b), xs))
    return int(np.count_nonzero(t.trace_q(fx) == 0))


# ---------------------------------------------------------------------------
# weight distributions

@dataclass
class WeightDistribution:
    """Weight -> frequency, plus the code length and nominal dimension."""

    n: int
    k: int
    counts: dict[int, int] = field(default_factory=dict)
    exact: bool = True

    def __post_init__(self):
        self.counts = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def min_distance(self) -> int | None:
        nz = [w for w in self.counts if w > 0]
        return min(nz) if nz else None

    def merge(self, other: "WeightDistribution") -> "WeightDistribution":
        c = Counter(self.counts)
        c.update(other.counts)
        return WeightDistribution(self.n, self.k, dict(c), self.exact and other.exact)

    def to_json(self) -> dict:
        out = {"n": self.n, "k": self.k,
               "counts": {str(w): c for w, c in sorted(self.counts.items())}}
        if not self.exact:
            out["exact"] = False
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "WeightDistribution":
        return cls(int(obj["n"]), int(obj["k"]),
                   {int(w): int(c) for w, c in obj["counts"].items()},
                   bool(obj.get("exact", True)))

    def to_csv(self) -> str:
        lines = ["weight,frequency"]
        lines += [f"{w},{c}" for w, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"

    def enumerator(self) -> str:
        """Weight enumerator as a polynomial string, e.g. ``1 + 72x^12``."""
        terms = []
        for w, c in sorted(self.counts.items()):
            terms.append(str(c) if w == 0 else f"{c}x^{w}")
        return " + ".join(terms)


def _check_work(work: int, work_cap: int | None, what: str):
    cap = DEFAULT_WORK_CAP if work_cap is None else work_cap
    if work > cap:
        raise WorkCapError(f"{what} needs ~{work} steps, above work cap {cap}")


def _blocks(total: int, per_item: int) -> list[range]:
    size = max(1, _BLOCK_ELEMS // max(1, per_item))
    return [range(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _run_blocks(fn: Callable[[range], object], blocks: list[range], jobs: int | None):
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(blocks) == 1:
        return [fn(blk) for blk in blocks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, blocks))


def _trace_rows(params: CodeParams):
    """``A[a, i] = Tr(a g^i)`` and ``-B[b, i] = -Tr(b (beta g)^i)`` for all a, b."""
    t = params.tower
    gp, bgp = _row_powers(params)
    elems = t.elements()[:, None]
    ta = t.trace_q(t.mul(elems, gp[None, :]))
    neg_tb = t.neg(t.trace_q(t.mul(elems, bgp[None, :])))
    return ta, neg_tb


def zero_count_table(params: CodeParams, work_cap: int | None = None,
                     jobs: int | None = None) -> np.ndarray:
    """``Z[a, b]`` = number of zero coordinates of ``c(a, b)``, all pairs."""
    r, n = params.tower.r, params.n
    _check_work(r * r * n, work_cap, "zero-count table")
    ta, neg_tb = _trace_rows(params)

    def run(blk):
        # coordinate i of c(a,b) vanishes iff Tr(a g^i) == -Tr(b (beta g)^i)
        eq = ta[None, :, :] == neg_tb[blk.start:blk.stop, None, :]
        return eq.sum(axis=2).T

    parts = _run_blocks(run, _blocks(r, r * n), jobs)
    return np.concatenate(parts, axis=1)


def enumerate_weight_distribution(params: CodeParams, work_cap: int | None = None,
                                  jobs: int | None = None) -> WeightDistribution:
    """Exact weight distribution over all ``(a, b)`` in GF(r)^2."""
    r, n = params.tower.r, params.n
    _check_work(r * r * n, work_cap, "enumeration")
    ta, neg_tb = _trace_rows(params)

    def run(blk):
        eq = ta[None, :, :] == neg_tb[blk.start:blk.stop, None, :]
        weights = n - eq.sum(axis=2)
        return np.bincount(weights.ravel(), minlength=n + 1)

    hist = sum(_run_blocks(run, _blocks(r, r * n), jobs))
    return WeightDistribution(n, params.k, {w: int(c) for w, c in enumerate(hist)})


def sample_weight_distribution(params: CodeParams, samples: int,
                               seed: int = 0) -> WeightDistribution:
    """Weights of ``samples`` uniformly random codewords; marked non-exact."""
    rng = np.random.default_rng(seed)
    t = params.tower
    gp, bgp = _row_powers(params)
    a = rng.integers(0, t.r, size=samples)
    b = rng.integers(0, t.r, size=samples)
    hist = np.zeros(params.n + 1, dtype=np.int64)
    step = max(1, _BLOCK_ELEMS // params.n)
    for lo in range(0, samples, step):
        sa, sb = a[lo:lo + step, None], b[lo:lo + step, None]
        words = t.trace_q(t.add(t.mul(sa, gp[None, :]), t.mul(sb, bgp[None, :])))
        hist += np.bincount(np.count_nonzero(words, axis=1), minlength=params.n + 1)
    return WeightDistribution(params.n, params.k, dict(enumerate(hist.tolist())), exact=False)


def code_dimension(params: CodeParams, dist: WeightDistribution) -> int:
    """Dimension over GF(q) implied by the multiplicity of the zero word."""
    q = params.tower.q
    zeros = dist.counts.get(0, 0)
    total = dist.total
    if zeros < 1 or total % zeros:
        raise InternalCheckError("weight-0 multiplicity inconsistent with linearity")
    size = total // zeros
    k = round(math.log(size, q)) if size > 1 else 0
    if q ** k != size:
        raise InternalCheckError(f"code size {size} is not a power of q = {q}")
    return k


# ---------------------------------------------------------------------------
# character-sum view of the zero count

def _class_index(params: CodeParams, i: int) -> int:
    return (params.g_log * i) % params.f


def y_value(params: CodeParams, a: int, b: int) -> CyclotomicIntegerValue:
    """``sum_{i<e} sum_{z in C_{(q-1)i/h}^{(f)}} chi((a + beta^i b) z)``, exactly."""
    t = params.tower
    hist = np.zeros(t.p, dtype=np.int64)
    for i in range(params.e):
        cls = cyclotomic_class(t, params.f, params.g_log * i)
        c = t.add(a, t.mul(t.exp(params.beta_log * i), b))
        hist += np.bincount(t.trace_p(t.mul(c, cls)), minlength=t.p)
    return CyclotomicIntegerValue.from_histogram(t.p, hist)


def _z_from_y(params: CodeParams, y: int):
    """Zero count from an integer Y value; returns Fraction."""
    t = params.tower
    return Fraction(params.e * params.n + params.h * params.f * y, params.e * t.q)


def zero_count_formula(params: CodeParams, a: int, b: int) -> int:
    y = y_value(params, a, b)
    if not y.is_rational():
        raise InternalCheckError(f"Y({a}, {b}) = {y} is not rational")
    z = _z_from_y(params, y.rational_value())
    if z.denominator != 1:
        raise InternalCheckError(f"zero count formula gave non-integer {z}")
    return int(z)


def _shift_histograms(params: CodeParams) -> dict[int, np.ndarray]:
    """For each cyclotomic class index j used by Y: H_j[c] = trace histogram of c * C_j."""
    t = params.tower
    r, p = t.r, t.p
    out = {}
    width = (r - 1) // params.f
    for i in range(params.e):
        j = _class_index(params, i)
        if j in out:
            continue
        cls = cyclotomic_class(t, params.f, j)
        tab = np.zeros((r, p), dtype=np.int64)
        for blk in _blocks(r, width):
            c = np.arange(blk.start, blk.stop, dtype=np.int64)[:, None]
            tr = t.trace_p(t.mul(c, cls[None, :]))
            # per-row bincount via offsets
            offs = tr + p * np.arange(len(blk))[:, None]
            tab[blk.start:blk.stop] = np.bincount(offs.ravel(), minlength=p * len(blk)).reshape(len(blk), p)
        out[j] = tab
    return out


def _y_rows_for_b(params: CodeParams, shifts: dict[int, np.ndarray], elems: np.ndarray,
                  b: int) -> np.ndarray:
    """Raw Y histograms for all ``a`` at fixed ``b``; shape (r, p)."""
    t = params.tower
    acc = np.zeros((t.r, t.p), dtype=np.int64)
    for i in range(params.e):
        c = t.add(elems, t.mul(t.exp(params.beta_log * i), b))
        acc += shifts[_class_index(params, i)][c]
    return acc


def _y_work(params: CodeParams) -> int:
    t = params.tower
    return t.r * t.r * (t.p + t.degree) * params.e + t.r * (t.r - 1) * params.e // params.f


def y_census(params: CodeParams, work_cap: int | None = None,
             jobs: int | None = None) -> Counter:
    """Exhaustive distribution of Y(a, b) over GF(r)^2, keyed by exact value."""
    _check_work(_y_work(params), work_cap, "Y census")
    t = params.tower
    shifts = _shift_histograms(params)
    elems = t.elements()

    def run(blk):
        c = Counter()
        for b in blk:
            rows = _y_rows_for_b(params, shifts, elems, b)
            rows -= rows[:, -1:]
            uniq, cnt = np.unique(rows, axis=0, return_counts=True)
            for row, k in zip(uniq, cnt):
                c[CyclotomicIntegerValue(t.p, tuple(row.tolist()))] += int(k)
        return c

    total = Counter()
    for part in _run_blocks(run, _blocks(t.r, t.r * t.p), jobs):
        total.update(part)
    return total


def zero_count_formula_table(params: CodeParams, work_cap: int | None = None,
                             jobs: int | None = None) -> np.ndarray:
    """Formula-route ``Z[a, b]`` for all pairs; raises on any non-integer value."""
    _check_work(_y_work(params), work_cap, "formula table")
    t = params.tower
    shifts = _shift_histograms(params)
    elems = t.elements()
    e, h, f, n, q = params.e, params.h, params.f, params.n, t.q

    def run(blk):
        cols = []
        for b in blk:
            rows = _y_rows_for_b(params, shifts, elems, b)
            if not np.all(rows[:, 1:] == rows[:, 1:2]):
                bad = int(np.nonzero(~np.all(rows[:, 1:] == rows[:, 1:2], axis=1))[0][0])
                raise InternalCheckError(f"Y({bad}, {b}) is not rational")
            y = rows[:, 0] - rows[:, 1]
            num = e * n + h * f * y
            if np.any(num % (e * q)):
                raise InternalCheckError(f"zero count formula non-integer at b = {b}")
            cols.append(num // (e * q))
        return np.stack(cols, axis=1)

    parts = _run_blocks(run, _blocks(t.r, t.r * t.p), jobs)
    return np.concatenate(parts, axis=1)


# ---------------------------------------------------------------------------
# the e = 3, gcd = 2 regime

class PartitionLabel(enum.Enum):
    ZERO = "ZERO"
    C0STAR = "C0STAR"
    C2STAR = "C2STAR"
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"

    @property
    def partner(self) -> "PartitionLabel":
        """Class reached by scaling (a, b) with a non-square."""
        return _PARTNER[self]


_PARTNER = {
    PartitionLabel.ZERO: PartitionLabel.ZERO,
    PartitionLabel.C0STAR: PartitionLabel.C2STAR,
    PartitionLabel.C2STAR: PartitionLabel.C0STAR,
    PartitionLabel.C0: PartitionLabel.C3,
    PartitionLabel.C3: PartitionLabel.C0,
    PartitionLabel.C1: PartitionLabel.C2,
    PartitionLabel.C2: PartitionLabel.C1,
}

# (zeros, squares, non-squares) among a+b, a+beta b, a+beta^2 b
_PATTERN = {
    (3, 0, 0): PartitionLabel.ZERO,
    (1, 2, 0): PartitionLabel.C0STAR,
    (1, 0, 2): PartitionLabel.C2STAR,
    (0, 3, 0): PartitionLabel.C0,
    (0, 2, 1): PartitionLabel.C1,
    (0, 1, 2): PartitionLabel.C2,
    (0, 0, 3): PartitionLabel.C3,
}


def _regime_violations(params: CodeParams) -> list[str]:
    t = params.tower
    out = []
    if params.e != 3:
        out.append(f"e = {params.e}, theorem requires e = 3")
    if params.h % 3:
        out.append(f"3 does not divide h = {params.h}")
    if (t.q - 1) % params.h:
        out.append(f"h = {params.h} does not divide q - 1")
    if params.f != 2:
        out.append(f"gcd(m, e(q-1)/h) = {params.f}, theorem requires 2")
    return out


def require_theorem_regime(params: CodeParams):
    bad = _regime_violations(params)
    if bad:
        raise ParameterError("; ".join(bad))


def require_partition_regime(params: CodeParams):
    if params.e != 3 or params.f != 2:
        raise ParameterError(
            f"partition needs e = 3 and gcd(m, e(q-1)/h) = 2, got e = {params.e}, gcd = {params.f}")


def _shift_characters(params: CodeParams, a, b):
    t = params.tower
    return [t.quadratic_character(t.add(a, t.mul(t.exp(params.beta_log * i), b)))
            for i in range(3)]


def classify_codeword(params: CodeParams, a: int, b: int) -> PartitionLabel:
    require_partition_regime(params)
    chars = _shift_characters(params, a, b)
    key = (chars.count(0), chars.count(1), chars.count(-1))
    try:
        return _PATTERN[key]
    except KeyError:
        raise InternalCheckError(f"impossible residue pattern {key} at ({a}, {b})") from None


def partition_census(params: CodeParams, jobs: int | None = None) -> dict[PartitionLabel, int]:
    """Label counts over all of GF(r)^2."""
    require_partition_regime(params)
    t = params.tower
    elems = t.elements()
    codes = {z * 16 + s * 4 + ns: lab for (z, s, ns), lab in _PATTERN.items()}

    def run(blk):
        c = Counter()
        for b in blk:
            chars = np.stack(_shift_characters(params, elems, b))
            key = (np.sum(chars == 0, axis=0) * 16 + np.sum(chars == 1, axis=0) * 4
                   + np.sum(chars == -1, axis=0))
            vals, cnt = np.unique(key, return_counts=True)
            for v, k in zip(vals.tolist(), cnt.tolist()):
                if v not in codes:
                    raise InternalCheckError(f"impossible residue pattern at b = {b}")
                c[codes[v]] += k
        return c

    total = Counter()
    for part in _run_blocks(run, _blocks(t.r, t.r * 3), jobs):
        total.update(part)
    return {lab: total.get(lab, 0) for lab in PartitionLabel}


def predict_partition_counts(params: CodeParams) -> dict[PartitionLabel, int]:
    require_partition_regime(params)
    r = params.tower.r
    star = 3 * (r - 1) // 2
    pure = (r - 1) * (r - 5) // 8
    mixed = 3 * (r - 1) ** 2 // 8
    return {PartitionLabel.ZERO: 1,
            PartitionLabel.C0STAR: star, PartitionLabel.C2STAR: star,
            PartitionLabel.C0: pure, PartitionLabel.C3: pure,
            PartitionLabel.C1: mixed, PartitionLabel.C2: mixed}


def table1_rows(params: CodeParams) -> list[tuple[int, int]]:
    """The seven (weight, frequency) rows of the closed-form weight table."""
    require_theorem_regime(params)
    t = params.tower
    q, m, r, h = t.q, t.m, t.r, params.h
    big, small = q ** (m - 1), q ** ((m - 2) // 2)
    star = Fraction(3 * (r - 1), 2)
    pure = Fraction((r - 1) * (r - 5), 8)
    mixed = Fraction(3 * (r - 1) ** 2, 8)
    rows = [
        (Fraction(0), Fraction(1)),
        (Fraction(2 * h, 3) * (big + small), star),
        (Fraction(2 * h, 3) * (big - small), star),
        (Fraction(h) * (big + small), pure),
        (Fraction(h) * (big - small), pure),
        (Fraction(h, 3) * (3 * big + small), mixed),
        (Fraction(h, 3) * (3 * big - small), mixed),
    ]
    for w, c in rows:
        if w.denominator != 1 or c.denominator != 1:
            raise InternalCheckError(f"non-integer table entry {w}: {c}")
    return [(int(w), int(c)) for w, c in rows]


def distribution_from_rows(params: CodeParams, rows: Iterable[tuple[int, int]]) -> WeightDistribution:
    c = Counter()
    for w, k in rows:
        c[w] += k
    return WeightDistribution(params.n, params.k, dict(c))


def predict_table1(params: CodeParams) -> WeightDistribution:
    return distribution_from_rows(params, table1_rows(params))


def table2_rows(params: CodeParams) -> list[tuple[Fraction, int]]:
    """The seven (Y value, frequency) rows, values as exact rationals."""
    require_theorem_regime(params)
    t = params.tower
    r = t.r
    eta0, eta1 = gaussian_period_closed_form_N2(t.p, t.s, t.m)
    half = Fraction(r - 1, 2)
    star = 3 * (r - 1) // 2
    pure = (r - 1) * (r - 5) // 8
    mixed = 3 * (r - 1) ** 2 // 8
    return [
        (3 * half, 1),
        (half + 2 * eta0, star),
        (half + 2 * eta1, star),
        (3 * eta0, pure),
        (3 * eta1, pure),
        (-1 + eta0, mixed),
        (-1 + eta1, mixed),
    ]


def predict_table2(params: CodeParams) -> dict[CyclotomicIntegerValue, int]:
    p = params.tower.p
    out = Counter()
    for value, freq in table2_rows(params):
        out[CyclotomicIntegerValue.from_int(p, value)] += freq
    return dict(out)
