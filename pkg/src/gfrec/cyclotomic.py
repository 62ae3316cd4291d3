"""Exact arithmetic in Z[zeta] for a primitive p-th root of unity, p prime.

Values are stored on the power basis 1, zeta, ..., zeta^(p-2) with integer
coordinates; zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)).
For p = 2 the basis is just {1} and the ring degenerates to the ordinary
integers, which keeps character sums over F_2 on the same code path.
"""

from __future__ import annotations

import cmath

from .galois import is_prime


class CycInt:
    """An element of Z[zeta_p] with exact integer coordinates."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        if not is_prime(p):
            raise ValueError("root order must be prime, got %r" % (p,))
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError("expected %d coordinates, got %d" % (p - 1, len(coeffs)))
        self.p = p
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def from_root_counts(cls, p, counts):
        """Canonical form of sum_t counts[t] * zeta^t, counts indexed 0..p-1."""
        counts = list(counts)
        if len(counts) != p:
            raise ValueError("expected %d exponent counts" % p)
        top = counts[p - 1]
        return cls(p, tuple(counts[i] - top for i in range(p - 1)))

    @classmethod
    def zero(cls, p):
        return cls.from_int(p, 0)

    @classmethod
    def one(cls, p):
        return cls.from_int(p, 1)

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, CycInt):
            raise TypeError("expected a CycInt")
        if self.p != other.p:
            raise ValueError("mixed root orders %d and %d" % (self.p, other.p))

    def __add__(self, other):
        self._check(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        self._check(other)
        p = self.p
        counts = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        counts[(i + j) % p] += a * b
        return CycInt.from_root_counts(p, counts)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def conjugate(self):
        """Complex conjugate, i.e. the automorphism zeta -> zeta^(-1)."""
        counts = [0] * self.p
        for i, a in enumerate(self.coeffs):
            counts[(-i) % self.p] += a
        return CycInt.from_root_counts(self.p, counts)

    def galois_map(self, s):
        """The automorphism zeta -> zeta^s for s not divisible by p."""
        if s % self.p == 0:
            raise ValueError("exponent must be prime to p")
        counts = [0] * self.p
        for i, a in enumerate(self.coeffs):
            counts[(i * s) % self.p] += a
        return CycInt.from_root_counts(self.p, counts)

    def divide_exact(self, n):
        """Divide by a nonzero integer, failing unless every coordinate divides."""
        if n == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for a in self.coeffs:
            qt, rm = divmod(a, n)
            if rm:
                raise ValueError("non-integral division of %r by %d" % (self, n))
            out.append(qt)
        return CycInt(self.p, tuple(out))

    # -- queries ------------------------------------------------------------

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def as_integer(self):
        """The value as a plain integer, or None when it is not rational."""
        if any(a != 0 for a in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_complex(self):
        z = cmath.exp(2j * cmath.pi / self.p)
        acc = complex(0)
        power = complex(1)
        for a in self.coeffs:
            acc += a * power
            power *= z
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, CycInt)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return "CycInt(p=%d, %s)" % (self.p, list(self.coeffs))

    # -- serialization ------------------------------------------------------

    def to_record(self):
        return {"p": self.p, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_record(cls, rec):
        return cls(int(rec["p"]), tuple(int(c) for c in rec["coeffs"]))


def root_power(p, e):
    """zeta_p^e in canonical coordinates."""
    counts = [0] * p
    counts[e % p] = 1
    return CycInt.from_root_counts(p, counts)


def regular_matrix(a):
    """Multiplication by a as an integer matrix on the power basis.

    Column j holds the coordinates of a * zeta^j, so the map is a ring
    homomorphism: regular_matrix(a * b) = regular_matrix(a) @ regular_matrix(b).
    """
    n = a.p - 1
    cols = []
    for j in range(n):
        img = a * root_power(a.p, j)
        cols.append(img.coeffs)
    return [[cols[j][i] for j in range(n)] for i in range(n)]
