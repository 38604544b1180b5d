"""Slow reference arithmetic in GF(p^d): polynomials as tuples, no tables.

Used only as an oracle.  Elements are tuples of coefficients (constant term
first) and can be converted to/from the packed integer codes used by the
library, which is just base-p positional notation.
"""


class NaiveField:
    def __init__(self, p, modulus):
        self.p = p
        self.mod = [c % p for c in modulus]
        self.d = len(modulus) - 1

    def from_code(self, x):
        out = []
        for _ in range(self.d):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def to_code(self, v):
        return sum(c * self.p ** i for i, c in enumerate(v))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, d = self.p, self.d
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                for j in range(d + 1):
                    prod[k - d + j] = (prod[k - d + j] - c * self.mod[j]) % p
        return tuple(prod[:d])

    def one(self):
        return (1,) + (0,) * (self.d - 1)

    def zero(self):
        return (0,) * self.d

    def pow(self, a, e):
        out = self.one()
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def root(self):
        if self.d == 1:
            return ((-self.mod[0]) % self.p,)
        return (0, 1) + (0,) * (self.d - 2)

    def order(self, a):
        """Multiplicative order by repeated multiplication (None for zero divisors)."""
        x = a
        for k in range(1, self.p ** self.d):
            if x == self.one():
                return k
            x = self.mul(x, a)
        return None

    def frob_sum(self, a, base, terms):
        """sum_{i<terms} a^(base^i) using repeated p-th powers."""
        acc = self.zero()
        x = a
        for _ in range(terms):
            acc = self.add(acc, x)
            x = self.pow(x, base)
        return acc
