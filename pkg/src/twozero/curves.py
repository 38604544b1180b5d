"""Point counts on the two curve models needed for the S_0 / S_3 counts.

* Weierstrass cubics ``y^2 = x^3 + a2 x^2 + a4 x + a6`` and their quadratic
  twists,
* intersections of two quadrics: the twisted Jacobi intersection
  ``a u^2 + v^2 = 1, b u^2 + w^2 = 1`` and the shape
  ``U^2 - V^2 = c1 Z^2, U^2 - W^2 = c2 Z^2`` of the auxiliary systems.

All counts are exhaustive over one coordinate with a square-class lookup
for the others, so they cost O(r) table reads.  Odd characteristic only.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import CodeParams, require_partition_regime
from .errors import ExceptionalPointError, ParameterError
from .ffield import FieldTower


def _require_odd(tower: FieldTower):
    if tower.p == 2:
        raise ParameterError("curve models here need odd characteristic")


def _root_counts(tower: FieldTower, x):
    """Number of y with y^2 = x, elementwise."""
    return 1 + tower.quadratic_character(x)


@dataclass(frozen=True)
class PointCount:
    total: int
    affine: int
    at_infinity: int

    def hasse_ok(self, r: int) -> bool:
        return (self.total - (r + 1)) ** 2 <= 4 * r

    def to_json(self, curve: str, r: int) -> dict:
        return {"curve": curve, "total": self.total, "affine": self.affine,
                "infinity": self.at_infinity, "hasse_ok": self.hasse_ok(r)}


# ---------------------------------------------------------------------------
# Weierstrass cubics

@dataclass(frozen=True)
class WeierstrassCurve:
    a2: int
    a4: int
    a6: int

    @classmethod
    def over(cls, tower: FieldTower, a2: int, a4: int, a6: int) -> "WeierstrassCurve":
        curve = cls(int(a2), int(a4), int(a6))
        curve.check(tower)
        return curve

    def discriminant(self, tower: FieldTower) -> int:
        """Discriminant of the cubic on the right-hand side."""
        t = tower
        a2, a4, a6 = self.a2, self.a4, self.a6
        terms = [
            t.scale(18, t.mul(t.mul(a2, a4), a6)),
            t.scale(-4, t.mul(t.power(a2, 3), a6)),
            t.mul(t.power(a2, 2), t.power(a4, 2)),
            t.scale(-4, t.power(a4, 3)),
            t.scale(-27, t.power(a6, 2)),
        ]
        acc = 0
        for term in terms:
            acc = t.add(acc, term)
        return acc

    def check(self, tower: FieldTower):
        _require_odd(tower)
        if self.discriminant(tower) == 0:
            raise ParameterError(f"singular curve {self.describe(tower)}")

    def rhs(self, tower: FieldTower, x):
        t = tower
        x2 = t.mul(x, x)
        return t.add(t.add(t.mul(x2, x), t.mul(self.a2, x2)), t.add(t.mul(self.a4, x), self.a6))

    def contains(self, tower: FieldTower, x, y) -> bool:
        return tower.mul(y, y) == self.rhs(tower, x)

    def describe(self, tower: FieldTower | None = None) -> str:
        return f"y^2 = x^3 + [{self.a2}]x^2 + [{self.a4}]x + [{self.a6}]"


def count_weierstrass(tower: FieldTower, curve: WeierstrassCurve) -> PointCount:
    curve.check(tower)
    affine = int(np.sum(_root_counts(tower, curve.rhs(tower, tower.elements()))))
    return PointCount(affine + 1, affine, 1)


def quadratic_twist(tower: FieldTower, curve: WeierstrassCurve, gamma: int) -> WeierstrassCurve:
    _require_odd(tower)
    if tower.quadratic_character(gamma) != -1:
        raise ParameterError("twist parameter must be a non-square")
    t = tower
    return WeierstrassCurve.over(t, t.mul(gamma, curve.a2), t.mul(t.power(gamma, 2), curve.a4),
                                 t.mul(t.power(gamma, 3), curve.a6))


def legendre_form(tower: FieldTower, a: int, b: int) -> WeierstrassCurve:
    """``y^2 = x (x - a)(x - b)`` expanded."""
    t = tower
    return WeierstrassCurve.over(t, t.neg(t.add(a, b)), t.mul(a, b), 0)


# ---------------------------------------------------------------------------
# quadric intersections

@dataclass(frozen=True)
class JacobiIntersection:
    """``a U^2 + V^2 = T^2, b U^2 + W^2 = T^2``."""

    a: int
    b: int

    @classmethod
    def over(cls, tower: FieldTower, a: int, b: int) -> "JacobiIntersection":
        _require_odd(tower)
        if a == 0 or b == 0 or a == b:
            raise ParameterError("need a b (a - b) != 0")
        return cls(int(a), int(b))

    def contains(self, tower: FieldTower, u, v, w) -> bool:
        t = tower
        uu = t.mul(u, u)
        return (t.add(t.mul(self.a, uu), t.mul(v, v)) == 1
                and t.add(t.mul(self.b, uu), t.mul(w, w)) == 1)

    def affine_points(self, tower: FieldTower) -> list[tuple[int, int, int]]:
        t = tower
        pts = []
        for u in range(t.r):
            uu = t.mul(u, u)
            v0 = t.sqrt(t.sub(1, t.mul(self.a, uu)))
            w0 = t.sqrt(t.sub(1, t.mul(self.b, uu)))
            if v0 is None or w0 is None:
                continue
            for v in {v0, t.neg(v0)}:
                for w in {w0, t.neg(w0)}:
                    pts.append((u, v, w))
        return pts


@dataclass(frozen=True)
class QuadricPairCurve:
    """``U^2 - V^2 = c1 Z^2, U^2 - W^2 = c2 Z^2`` in P^3."""

    c1: int
    c2: int

    @classmethod
    def over(cls, tower: FieldTower, c1: int, c2: int) -> "QuadricPairCurve":
        _require_odd(tower)
        if c1 == 0 or c2 == 0 or c1 == c2:
            raise ParameterError("need c1, c2, c1 - c2 all nonzero")
        return cls(int(c1), int(c2))


def count_quadric_pair(tower: FieldTower, curve: QuadricPairCurve) -> PointCount:
    _require_odd(tower)
    t = tower
    uu = t.mul(t.elements(), t.elements())
    affine = int(np.sum(_root_counts(t, t.sub(uu, curve.c1)) * _root_counts(t, t.sub(uu, curve.c2))))
    # Z = 0 forces U != 0 (else V = W = 0); normalize U = 1, then V^2 = W^2 = 1
    infinity = int(_root_counts(t, 1)) ** 2
    return PointCount(affine + infinity, affine, infinity)


def aux_curves(params: CodeParams) -> tuple[QuadricPairCurve, QuadricPairCurve]:
    """J_0 and J_3: the quadric pairs behind systems with unit 1 and unit alpha."""
    require_partition_regime(params)
    t = params.tower
    beta = params.beta
    c1 = t.sub(1, beta)
    c2 = t.sub(1, t.mul(beta, beta))
    j0 = QuadricPairCurve.over(t, c1, c2)
    j3 = QuadricPairCurve.over(t, t.div(c1, t.alpha), t.div(c2, t.alpha))
    return j0, j3


# ---------------------------------------------------------------------------
# birational maps between J_{a,b} and E_{a,b}

def jacobi_to_weierstrass(tower: FieldTower, J: JacobiIntersection, point) -> tuple[int, int]:
    t = tower
    u, v, w = (int(c) for c in point)
    if v == 1:
        raise ExceptionalPointError("v = 1 is on the exceptional locus")
    den = t.sub(v, 1)
    x = t.neg(t.div(t.mul(J.a, t.add(w, 1)), den))
    y = t.mul(t.div(t.mul(J.a, u), den), t.sub(x, J.b))
    return x, y


def weierstrass_to_jacobi(tower: FieldTower, J: JacobiIntersection, point) -> tuple[int, int, int]:
    t = tower
    x, y = (int(c) for c in point)
    xx = t.mul(x, x)
    ab = t.mul(J.a, J.b)
    den = t.sub(xx, ab)
    if den == 0:
        raise ExceptionalPointError("x^2 = ab is on the exceptional locus")
    u = t.neg(t.div(t.scale(2, y), den))
    v = t.div(t.add(t.sub(xx, t.scale(2, t.mul(J.a, x))), ab), den)
    w = t.div(t.add(t.sub(xx, t.scale(2, t.mul(J.b, x))), ab), den)
    return u, v, w


# ---------------------------------------------------------------------------
# the auxiliary sets and the general family

def count_S0_S3_direct(params: CodeParams) -> tuple[int, int]:
    """``#{c : c+1, c+beta, c+beta^2 all squares}`` and the all-non-square count."""
    require_partition_regime(params)
    t = params.tower
    c = t.elements()
    chars = np.stack([t.quadratic_character(t.add(c, t.exp(params.beta_log * i)))
                      for i in range(3)])
    s0 = int(np.sum(np.all(chars == 1, axis=0)))
    s3 = int(np.sum(np.all(chars == -1, axis=0)))
    return s0, s3


def power_fibers(tower: FieldTower, f: int) -> np.ndarray:
    """``F[y] = #{x in GF(r) : x^f = y}``."""
    return np.bincount(tower.power(tower.elements(), f), minlength=tower.r)


def explore_family6(tower: FieldTower, e: int, f: int, shifts: Sequence[int],
                    units: Sequence[int]) -> int:
    """Count ``(x, x_0, ..., x_{e-1})`` with ``x + shift_i = unit_i x_i^f`` for all i."""
    if len(shifts) != e or len(units) != e:
        raise ParameterError(f"need exactly e = {e} shifts and units")
    if f < 1:
        raise ParameterError("f must be positive")
    t = tower
    allowed = {t.exp(k) for k in range(e)}
    if any(int(u) not in allowed for u in units):
        warnings.warn("units outside {alpha^0, ..., alpha^(e-1)}", stacklevel=2)
    fibers = power_fibers(t, f)
    xs = t.elements()
    total = np.ones(t.r, dtype=object)
    for shift, unit in zip(shifts, units):
        rhs = t.add(xs, int(shift))
        if int(unit) == 0:
            factor = np.where(rhs == 0, t.r, 0)
        else:
            factor = fibers[t.div(rhs, int(unit))]
        total = total * factor.astype(object)
    return int(np.sum(total))
