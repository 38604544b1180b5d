"""Table-driven arithmetic in the tower GF(p) < GF(q) < GF(r).

Elements of GF(r) are plain integers: the coefficient vector
``(c_0, ..., c_{d-1})`` of a polynomial in the primitive element ``alpha``
is packed as ``sum(c_i * p**i)``.  Zero is ``0``, one is ``1`` and the prime
subfield GF(p) is exactly the codes ``0 .. p-1``.  Multiplication goes
through the log/antilog tables, addition works digit by digit on the code.

Every arithmetic method accepts either a Python int or an integer numpy
array and answers in kind, so whole-field sweeps stay vectorized.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InternalCheckError, ParameterError, WorkCapError

DEFAULT_SIZE_CAP = 2 ** 22


# ---------------------------------------------------------------------------
# integer helpers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p), constant term first

def parse_poly(text: str) -> list[int]:
    """Parse ``"3,1,1"`` into ``[3, 1, 1]`` (that is x^2 + x + 3)."""
    try:
        coeffs = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParameterError(f"cannot parse polynomial {text!r}") from None
    if not coeffs:
        raise ParameterError("empty polynomial")
    return coeffs


def format_poly(coeffs: Sequence[int]) -> str:
    return ",".join(str(int(c)) for c in coeffs)


def _polymulmod(a, b, mod, p):
    # mod is monic; all lists constant term first, len(a), len(b) < len(mod)
    d = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j in range(d + 1):
                prod[k - d + j] = (prod[k - d + j] - c * mod[j]) % p
    prod = prod[:d] + [0] * (d - len(prod))
    return prod


def _polypowmod(base, e, mod, p):
    d = len(mod) - 1
    result = [1] + [0] * (d - 1)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive_poly(coeffs: Sequence[int], p: int) -> bool:
    """True when ``coeffs`` is monic and its root has order ``p**deg - 1``.

    A root of full order in ``GF(p)[x]/(f)`` generates every nonzero
    residue, which forces the quotient to be a field, so this also
    certifies irreducibility.
    """
    coeffs = [int(c) % p for c in coeffs]
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != 1 or coeffs[0] == 0:
        return False
    order = p ** d - 1
    one = [1] + [0] * (d - 1)
    if d == 1:
        x = [(-coeffs[0]) % p]
    else:
        x = [0, 1] + [0] * (d - 2)
    if _polypowmod(x, order, coeffs, p) != one:
        return False
    return all(_polypowmod(x, order // ell, coeffs, p) != one
               for ell in prime_factors(order))


def find_primitive_poly(p: int, degree: int, size_cap: int = DEFAULT_SIZE_CAP) -> list[int]:
    """Lexicographically smallest monic primitive polynomial of ``degree``.

    Candidates are ordered by the tuple ``(c_{d-1}, ..., c_1, c_0)``.
    The result is returned constant term first.
    """
    if not is_prime(p):
        raise ParameterError(f"p = {p} is not prime")
    if degree < 1:
        raise ParameterError("degree must be positive")
    if p ** degree > size_cap:
        raise WorkCapError(f"p^degree = {p ** degree} exceeds size cap {size_cap}")
    for high_to_low in itertools.product(range(p), repeat=degree):
        coeffs = list(reversed(high_to_low)) + [1]
        if is_primitive_poly(coeffs, p):
            return coeffs
    raise InternalCheckError(f"no primitive polynomial of degree {degree} over GF({p})")


# ---------------------------------------------------------------------------
# the tower

@dataclass(frozen=True)
class FieldParams:
    p: int
    s: int
    m: int
    modulus: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FieldTower:
    """GF(p) < GF(q = p^s) < GF(r = q^m) with tables built once.

    Use :func:`build_field` rather than constructing this directly.
    """

    params: FieldParams
    antilog: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)
    trace_q_table: np.ndarray = field(repr=False)
    trace_p_table: np.ndarray = field(repr=False)

    # -- sizes -------------------------------------------------------------
    @property
    def p(self) -> int:
        return self.params.p

    @property
    def s(self) -> int:
        return self.params.s

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def degree(self) -> int:
        return self.params.s * self.params.m

    @property
    def q(self) -> int:
        return self.params.p ** self.params.s

    @property
    def r(self) -> int:
        return self.params.p ** self.degree

    @property
    def alpha(self) -> int:
        return int(self.antilog[1 % (self.r - 1)])

    def __repr__(self):
        return (f"FieldTower(p={self.p}, s={self.s}, m={self.m}, "
                f"modulus={format_poly(self.params.modulus)})")

    def elements(self) -> np.ndarray:
        return np.arange(self.r, dtype=np.int64)

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.r, dtype=np.int64)

    def subfield_elements(self) -> np.ndarray:
        """GF(q) as a sorted array of codes."""
        step = (self.r - 1) // (self.q - 1)
        sub = self.antilog[::step][: self.q - 1]
        return np.sort(np.concatenate([[0], sub]))

    # -- conversions -------------------------------------------------------
    def from_int(self, k):
        """Image of the integer ``k`` in the prime subfield."""
        return _like(np.asarray(k, dtype=np.int64) % self.p, k)

    def coeffs(self, x) -> list[int]:
        x = int(x)
        out = []
        for _ in range(self.degree):
            out.append(x % self.p)
            x //= self.p
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.degree:
            raise ParameterError("coefficient vector longer than field degree")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    # -- multiplicative side ----------------------------------------------
    def exp(self, k):
        """``alpha ** k`` for any integer (or integer array) ``k``."""
        return _like(self.antilog[np.asarray(k, dtype=np.int64) % (self.r - 1)], k)

    def log(self, x):
        """Discrete logarithm base ``alpha``; raises on zero."""
        arr = np.asarray(x, dtype=np.int64)
        out = self.log_table[arr]
        if np.any(out < 0):
            raise ParameterError("logarithm of zero")
        return _like(out, x)

    def mul(self, x, y):
        x_ = np.asarray(x, dtype=np.int64)
        y_ = np.asarray(y, dtype=np.int64)
        lx = self.log_table[x_]
        ly = self.log_table[y_]
        out = np.where((x_ == 0) | (y_ == 0), 0,
                       self.antilog[(lx + ly) % (self.r - 1)])
        return _like(out, x, y)

    def inv(self, x):
        x_ = np.asarray(x, dtype=np.int64)
        if np.any(x_ == 0):
            raise ParameterError("inverse of zero")
        return _like(self.antilog[(-self.log_table[x_]) % (self.r - 1)], x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, k: int):
        x_ = np.asarray(x, dtype=np.int64)
        if k == 0:
            return _like(np.ones_like(x_), x)
        if k < 0:
            return self.power(self.inv(x), -k)
        lx = self.log_table[x_]
        out = np.where(x_ == 0, 0, self.antilog[(lx * (k % (self.r - 1))) % (self.r - 1)])
        return _like(out, x)

    def order(self, x) -> int:
        """Multiplicative order of a nonzero element."""
        lx = int(self.log(x))
        return (self.r - 1) // math.gcd(lx, self.r - 1)

    # -- additive side -----------------------------------------------------
    def add(self, x, y):
        x_ = np.asarray(x, dtype=np.int64)
        y_ = np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return _like(x_ ^ y_, x, y)
        p = self.p
        out = np.zeros(np.broadcast(x_, y_).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.degree):
            out += ((x_ // pw + y_ // pw) % p) * pw
            pw *= p
        return _like(out, x, y)

    def neg(self, x):
        x_ = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            return _like(x_.copy(), x)
        p = self.p
        out = np.zeros_like(x_)
        pw = 1
        for _ in range(self.degree):
            out += ((-(x_ // pw)) % p) * pw
            pw *= p
        return _like(out, x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, k: int, x):
        """``k * x`` for an integer ``k`` (repeated addition)."""
        return self.mul(self.from_int(k), x)

    # -- traces, squares, subfield ----------------------------------------
    def trace_q(self, x):
        return _like(self.trace_q_table[np.asarray(x, dtype=np.int64)], x)

    def trace_p(self, x):
        return _like(self.trace_p_table[np.asarray(x, dtype=np.int64)], x)

    def in_subfield(self, x):
        x_ = np.asarray(x, dtype=np.int64)
        step = (self.r - 1) // (self.q - 1)
        out = (x_ == 0) | (self.log_table[x_] % step == 0)
        return _like(out, x)

    def quadratic_character(self, x):
        """1 on nonzero squares, -1 on non-squares, 0 on zero (odd p)."""
        if self.p == 2:
            raise ParameterError("quadratic character needs odd characteristic")
        x_ = np.asarray(x, dtype=np.int64)
        lx = self.log_table[x_]
        out = np.where(x_ == 0, 0, np.where(lx % 2 == 0, 1, -1))
        return _like(out, x)

    def is_square(self, x):
        """Nonzero square test (zero answers False)."""
        x_ = np.asarray(x, dtype=np.int64)
        lx = self.log_table[x_]
        if self.p == 2:
            out = x_ != 0
        else:
            out = (x_ != 0) & (lx % 2 == 0)
        return _like(out, x)

    def sqrt(self, x):
        """One square root of ``x``, or ``None`` / ``-1`` (arrays) if none."""
        x_ = np.asarray(x, dtype=np.int64)
        lx = self.log_table[x_]
        if self.p == 2:
            root = self.antilog[(lx * ((self.r) // 2)) % (self.r - 1)]
            out = np.where(x_ == 0, 0, root)
        else:
            out = np.where(x_ == 0, 0,
                           np.where(lx % 2 == 0, self.antilog[(lx // 2) % (self.r - 1)], -1))
        if np.ndim(x) == 0:
            v = int(out)
            return None if v < 0 else v
        return out


def _like(out, *inputs):
    """Return a Python scalar when every input was a scalar."""
    if all(np.ndim(i) == 0 for i in inputs):
        return np.asarray(out).item()
    return out


def _antilog_table(modulus: Sequence[int], p: int) -> np.ndarray:
    """Codes of ``alpha**k`` for ``0 <= k < p**d - 1`` by block doubling."""
    d = len(modulus) - 1
    r = p ** d
    size = r - 1
    vecs = np.zeros((size, d), dtype=np.int64)
    vecs[0, 0] = 1
    # row j of ``mat`` is alpha^L * x^j, so v @ mat multiplies v by alpha^L
    mat = np.zeros((d, d), dtype=np.int64)
    low = np.array([(-c) % p for c in modulus[:d]], dtype=np.int64)
    for j in range(d - 1):
        mat[j, j + 1] = 1
    mat[d - 1] = low
    filled = 1
    while filled < size:
        take = min(filled, size - filled)
        vecs[filled:filled + take] = (vecs[:take] @ mat) % p
        filled += take
        mat = (mat @ mat) % p
    pows = p ** np.arange(d, dtype=np.int64)
    return vecs @ pows


def build_field(p: int, s: int = 1, m: int = 1, modulus: Sequence[int] | None = None,
                size_cap: int = DEFAULT_SIZE_CAP) -> FieldTower:
    """Construct GF(p) < GF(p^s) < GF(p^(s*m)) with alpha the indeterminate's class."""
    if not is_prime(p):
        raise ParameterError(f"p = {p} is not prime")
    if s < 1 or m < 1:
        raise ParameterError("s and m must be positive")
    d = s * m
    r = p ** d
    if r > size_cap:
        raise WorkCapError(f"r = {r} exceeds size cap {size_cap}")
    if modulus is None:
        modulus = find_primitive_poly(p, d, size_cap=size_cap)
    else:
        modulus = [int(c) for c in modulus]
        if any(not 0 <= c < p for c in modulus):
            raise ParameterError("modulus coefficients must lie in [0, p)")
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise ParameterError(f"modulus must be monic of degree {d}")

    antilog = _antilog_table(modulus, p)
    log_table = np.full(r, -1, dtype=np.int64)
    log_table[antilog] = np.arange(r - 1, dtype=np.int64)
    if np.any(antilog == 0) or np.count_nonzero(log_table >= 0) != r - 1:
        raise ParameterError(f"modulus {format_poly(modulus)} is not primitive over GF({p})")

    q = p ** s
    lognz = log_table[1:]
    trace_q = _frobenius_sum(antilog, lognz, p, d, q, m, r)
    trace_p = _frobenius_sum(antilog, lognz, p, d, p, d, r)

    tower = FieldTower(FieldParams(p, s, m, tuple(modulus)), antilog, log_table,
                       trace_q, trace_p)
    for tbl in (antilog, log_table, trace_q, trace_p):
        tbl.setflags(write=False)
    return tower


def _frobenius_sum(antilog, lognz, p, d, base, terms, r):
    """Table of ``sum_{i<terms} x**(base**i)`` over all codes ``x``."""
    acc = np.zeros(r - 1, dtype=np.int64)
    e = 1
    for _ in range(terms):
        term = antilog[(lognz * e) % (r - 1)]
        if p == 2:
            acc ^= term
        else:
            s = np.zeros_like(acc)
            pw = 1
            for _ in range(d):
                s += ((acc // pw + term // pw) % p) * pw
                pw *= p
            acc = s
        e = (e * base) % (r - 1)
    return np.concatenate([[0], acc]).astype(np.int64)


# ---------------------------------------------------------------------------
# module-level operations

def trace_to_subfield(x, tower: FieldTower):
    """Tr_{r/q}(x), returned as a GF(r) code lying in GF(q)."""
    return tower.trace_q(x)


def trace_to_prime(x, tower: FieldTower):
    """Tr_{r/p}(x) as an integer in ``[0, p)``."""
    return tower.trace_p(x)


def discrete_log(tower: FieldTower, x) -> int:
    if int(x) == 0:
        raise ParameterError("discrete log of zero")
    return int(tower.log(int(x)))


def cyclotomic_class(tower: FieldTower, N: int, i: int) -> np.ndarray:
    """The coset ``alpha**i * <alpha**N>`` as an array of codes (ascending exponent)."""
    if N < 1 or (tower.r - 1) % N:
        raise ParameterError(f"N = {N} does not divide r - 1 = {tower.r - 1}")
    k = np.arange((tower.r - 1) // N, dtype=np.int64)
    return tower.exp(i + N * k)
