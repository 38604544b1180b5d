"""Exact additive character sums over subsets of GF(r).

A sum of ``chi(x) = zeta_p ** Tr_{r/p}(x)`` is an element of Z[zeta_p].
We keep it as the histogram of prime-field traces, which is exact, and
reduce modulo ``1 + zeta + ... + zeta^(p-1) = 0`` by shifting the
histogram so that its last entry is zero.  The powers
``1, zeta, ..., zeta^(p-2)`` are a Z-basis, so the canonical histogram
determines the value uniquely.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import ParameterError
from .ffield import FieldTower, cyclotomic_class


@dataclass(frozen=True)
class CyclotomicIntegerValue:
    """Element ``sum_t coeffs[t] * zeta_p**t`` of Z[zeta_p], canonical form."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p:
            raise ParameterError("histogram length must equal p")
        last = self.coeffs[-1]
        if last:
            object.__setattr__(self, "coeffs", tuple(int(c) - last for c in self.coeffs))
        else:
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_histogram(cls, p: int, hist) -> "CyclotomicIntegerValue":
        return cls(p, tuple(int(c) for c in hist))

    @classmethod
    def from_int(cls, p: int, k) -> "CyclotomicIntegerValue":
        k = Fraction(k)
        if k.denominator != 1:
            raise ParameterError(f"{k} is not an integer")
        return cls(p, (int(k),) + (0,) * (p - 1))

    @classmethod
    def zero(cls, p: int) -> "CyclotomicIntegerValue":
        return cls(p, (0,) * p)

    def __add__(self, other):
        if not isinstance(other, CyclotomicIntegerValue):
            other = CyclotomicIntegerValue.from_int(self.p, other)
        self._same_p(other)
        return CyclotomicIntegerValue(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicIntegerValue(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        # integer scaling only; products of cyclotomic values are not needed
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return CyclotomicIntegerValue(self.p, tuple(int(k) * c for c in self.coeffs))

    __rmul__ = __mul__

    def _same_p(self, other):
        if other.p != self.p:
            raise ParameterError("cannot combine values for different p")

    def is_rational(self) -> bool:
        return all(c == self.coeffs[1] for c in self.coeffs[1:])

    def rational_value(self) -> int:
        """Integer value; raises if the value is not rational."""
        if not self.is_rational():
            raise ParameterError(f"{self} is not rational")
        return self.coeffs[0] - self.coeffs[1]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.p)
        return sum(c * z ** t for t, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicIntegerValue":
        return cls(int(obj["p"]), tuple(int(c) for c in obj["coeffs"]))

    def __str__(self):
        if self.is_rational():
            return str(self.rational_value())
        terms = [f"{c}*z^{t}" for t, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) + f" (z = zeta_{self.p})"


def trace_histogram(tower: FieldTower, elements) -> np.ndarray:
    """Raw (non-canonical) trace histogram of a collection of elements."""
    arr = np.asarray(elements, dtype=np.int64).ravel()
    return np.bincount(tower.trace_p_table[arr], minlength=tower.p)


def character_sum(tower: FieldTower, elements: Iterable[int]) -> CyclotomicIntegerValue:
    """Exact ``sum chi(x)`` over ``elements`` (each counted once per occurrence)."""
    if not isinstance(elements, np.ndarray):
        elements = np.fromiter((int(x) for x in elements), dtype=np.int64)
    return CyclotomicIntegerValue.from_histogram(tower.p, trace_histogram(tower, elements))


def gaussian_period(tower: FieldTower, N: int, i: int) -> CyclotomicIntegerValue:
    return character_sum(tower, cyclotomic_class(tower, N, i))


def gaussian_period_closed_form_N2(p: int, s: int, m: int) -> tuple[Fraction, Fraction]:
    """Quadratic Gaussian periods ``(eta_0, eta_1)`` of GF(p^(s*m)) in closed form.

    Only the integer-valued cases are returned: ``s*m`` must be even.  For
    odd ``s*m`` the value involves ``sqrt(p)`` (real when p = 1 mod 4,
    imaginary when p = 3 mod 4); that case raises and callers should fall
    back to :func:`gaussian_period`.
    """
    if p == 2:
        raise ParameterError("order-2 periods need odd p")
    sm = s * m
    if sm % 2:
        kind = "non-real" if p % 4 == 3 else "irrational"
        raise ParameterError(f"closed form is {kind} for odd s*m; use exact character sum")
    root = p ** (sm // 2)
    sign = (-1) ** (sm - 1)
    if p % 4 == 3:
        sign *= (-1) ** (sm // 2)          # (sqrt(-1))^sm with sm even
    eta0 = Fraction(-1 + sign * root, 2)
    return eta0, -1 - eta0
