"""Polynomial families over n variables and their instantiation.

A monomial pattern (1, j1, ..., js) stands for X_1 X_{j1} ... X_{js}.
Rotation families sum all n cyclic shifts of the pattern monomial (indices
live in the residues 1..n), trapezoid families sum only the translates
that fit without wrapping, and sigma(k) is the k-th elementary symmetric
polynomial.  Expressions combine these with scalar multiples and sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class MonomialPattern:
    offsets: tuple

    def __post_init__(self):
        offs = tuple(int(o) for o in self.offsets)
        object.__setattr__(self, "offsets", offs)
        if not offs or offs[0] != 1:
            raise ValueError("pattern must start with offset 1")
        if any(b <= a for a, b in zip(offs, offs[1:])):
            raise ValueError("offsets must be strictly increasing")

    @property
    def degree(self):
        return len(self.offsets)

    @property
    def width(self):
        return self.offsets[-1]


@dataclass(frozen=True)
class Rotation:
    pattern: MonomialPattern

    def __post_init__(self):
        if self.pattern.degree < 2:
            raise ValueError("rotation needs a pattern of degree >= 2")

    def min_n(self):
        return self.pattern.width


@dataclass(frozen=True)
class Trapezoid:
    pattern: MonomialPattern

    def __post_init__(self):
        if self.pattern.degree < 2:
            raise ValueError("trapezoid needs a pattern of degree >= 2")

    def min_n(self):
        return self.pattern.width


@dataclass(frozen=True)
class Sigma:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("sigma needs k >= 1")

    def min_n(self):
        return self.k


@dataclass(frozen=True)
class ScalarMul:
    scalar_index: int
    expr: object

    def min_n(self):
        return self.expr.min_n()


@dataclass(frozen=True)
class Sum:
    parts: tuple

    def min_n(self):
        return max(part.min_n() for part in self.parts)


def tau(k):
    """The consecutive trapezoid family T(2,...,k)."""
    return Trapezoid(MonomialPattern(tuple(range(1, k + 1))))


def consecutive_rotation(k):
    return Rotation(MonomialPattern(tuple(range(1, k + 1))))


# ---------------------------------------------------------------------------
# parsing

class ExprSyntaxError(ValueError):
    pass


def _parse_int_list(text, start, source):
    if start >= len(text) or text[start] != "(":
        raise ExprSyntaxError("expected '(' at position %d in %r" % (start, source))
    i = start + 1
    out = []
    num = ""
    while i < len(text):
        ch = text[i]
        if ch.isdigit():
            num += ch
        elif ch == ",":
            if not num:
                raise ExprSyntaxError("empty number at position %d in %r" % (i, source))
            out.append(int(num))
            num = ""
        elif ch == ")":
            if not num:
                raise ExprSyntaxError("empty number at position %d in %r" % (i, source))
            out.append(int(num))
            return out, i + 1
        else:
            raise ExprSyntaxError("unexpected %r at position %d in %r" % (ch, i, source))
        i += 1
    raise ExprSyntaxError("unbalanced '(' in %r" % source)


def parse(source):
    """Parse an expression like ``R(2,3) + e2*T(2,4) + sigma(3) + tau(4)``.

    Scalar literals are written ``e<index>`` and name field elements by
    their enumeration index; they bind to the atom that follows ``*``.
    """
    text = source.replace(" ", "").replace("\t", "")
    if not text:
        raise ExprSyntaxError("empty expression")
    parts = []
    i = 0
    while True:
        scalar = None
        if text.startswith("e", i) and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "*":
                scalar = int(text[i + 1 : j])
                i = j + 1
        atom, i = _parse_atom(text, i, source)
        if scalar is not None:
            atom = ScalarMul(scalar, atom)
        parts.append(atom)
        if i == len(text):
            break
        if text[i] != "+":
            raise ExprSyntaxError(
                "unexpected %r at position %d in %r" % (text[i], i, source)
            )
        i += 1
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))


def _parse_atom(text, i, source):
    for name in ("tau", "sigma"):
        if text.startswith(name, i):
            args, j = _parse_int_list(text, i + len(name), source)
            if len(args) != 1:
                raise ExprSyntaxError("%s takes a single argument in %r" % (name, source))
            return (tau(args[0]) if name == "tau" else Sigma(args[0])), j
    if text.startswith("R", i) or text.startswith("T", i):
        kind = text[i]
        args, j = _parse_int_list(text, i + 1, source)
        pattern = MonomialPattern((1,) + tuple(args))
        return (Rotation(pattern) if kind == "R" else Trapezoid(pattern)), j
    raise ExprSyntaxError("expected a family atom at position %d in %r" % (i, source))


def unparse(e):
    if isinstance(e, Rotation):
        return "R(%s)" % ",".join(str(o) for o in e.pattern.offsets[1:])
    if isinstance(e, Trapezoid):
        return "T(%s)" % ",".join(str(o) for o in e.pattern.offsets[1:])
    if isinstance(e, Sigma):
        return "sigma(%d)" % e.k
    if isinstance(e, ScalarMul):
        return "e%d*%s" % (e.scalar_index, unparse(e.expr))
    if isinstance(e, Sum):
        return " + ".join(unparse(part) for part in e.parts)
    raise TypeError("not an expression: %r" % (e,))


# ---------------------------------------------------------------------------
# index sets and shifts

def shift(monomial, k, n):
    """Apply the cyclic index shift i -> i + k (mod n, residues 1..n)."""
    out = set()
    for i in monomial:
        if not 1 <= i <= n:
            raise ValueError("index %d out of range 1..%d" % (i, n))
        out.add((i + k - 1) % n + 1)
    return frozenset(out)


def orbit(monomial, n):
    """All cyclic shifts of a monomial, with the lexicographically first
    member (on sorted index tuples) designated as representative."""
    seen = set()
    for k in range(1, n + 1):
        seen.add(shift(monomial, k, n))
    members = sorted(seen, key=lambda m: tuple(sorted(m)))
    return members[0], members


class InstantiatedFunction:
    """A concrete polynomial function on F_q^n, stored as monomial terms.

    Terms map index sets to nonzero field coefficients.  Coefficients of
    coinciding monomials are accumulated in the field, so families whose
    shifts collide (small n) can cancel down to fewer terms or to zero.
    """

    __slots__ = ("field", "n", "terms")

    def __init__(self, field, n, terms):
        self.field = field
        self.n = int(n)
        cleaned = {}
        for mono, coeff in terms.items():
            if not coeff.is_zero():
                cleaned[frozenset(mono)] = coeff
        self.terms = cleaned

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: tuple(sorted(kv[0])))

    def __eq__(self, other):
        return (
            isinstance(other, InstantiatedFunction)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        body = " + ".join(
            "%s*X%s" % (list(c.coeffs), sorted(m)) for m, c in self.sorted_terms()
        )
        return "InstantiatedFunction(n=%d, %s)" % (self.n, body or "0")


def _accumulate(acc, mono, coeff):
    cur = acc.get(mono)
    acc[mono] = coeff if cur is None else cur + coeff


def _expand(e, n, field, coeff, acc):
    if isinstance(e, ScalarMul):
        if not 0 <= e.scalar_index < field.q:
            raise ValueError(
                "scalar index %d out of range for F_%s" % (e.scalar_index, field.describe())
            )
        _expand(e.expr, n, field, coeff * field.from_index(e.scalar_index), acc)
        return
    if isinstance(e, Sum):
        for part in e.parts:
            _expand(part, n, field, coeff, acc)
        return
    if n < e.min_n():
        raise ValueError("n=%d below the family minimum %d" % (n, e.min_n()))
    if isinstance(e, Rotation):
        base = frozenset(e.pattern.offsets)
        for k in range(n):
            _accumulate(acc, shift(base, k, n), coeff)
        return
    if isinstance(e, Trapezoid):
        offs = e.pattern.offsets
        for t in range(n - e.pattern.width + 1):
            _accumulate(acc, frozenset(o + t for o in offs), coeff)
        return
    if isinstance(e, Sigma):
        for combo in combinations(range(1, n + 1), e.k):
            _accumulate(acc, frozenset(combo), coeff)
        return
    raise TypeError("not an expression: %r" % (e,))


def instantiate(e, n, field):
    """Expand an expression into a concrete function on F_q^n."""
    acc = {}
    _expand(e, n, field, field.one(), acc)
    return InstantiatedFunction(field, n, acc)


def evaluate(g, point):
    """Evaluate at a point given as a sequence of n field elements."""
    if len(point) != g.n:
        raise ValueError("point has %d coordinates, expected %d" % (len(point), g.n))
    total = g.field.zero()
    for mono, coeff in g.terms.items():
        val = coeff
        for i in mono:
            val = val * point[i - 1]
        total = total + val
    return total


def occurrence_profile(e, n):
    """For each variable, the number of distinct monomial index sets of the
    expanded expression that contain it (structural, field independent)."""
    sets = set()

    def walk(node):
        if isinstance(node, ScalarMul):
            walk(node.expr)
            return
        if isinstance(node, Sum):
            for part in node.parts:
                walk(part)
            return
        if n < node.min_n():
            raise ValueError("n=%d below the family minimum %d" % (n, node.min_n()))
        if isinstance(node, Rotation):
            base = frozenset(node.pattern.offsets)
            for k in range(n):
                sets.add(shift(base, k, n))
        elif isinstance(node, Trapezoid):
            offs = node.pattern.offsets
            for t in range(n - node.pattern.width + 1):
                sets.add(frozenset(o + t for o in offs))
        elif isinstance(node, Sigma):
            for combo in combinations(range(1, n + 1), node.k):
                sets.add(frozenset(combo))
        else:
            raise TypeError("not an expression: %r" % (node,))

    walk(e)
    profile = [0] * n
    for mono in sets:
        for i in mono:
            profile[i - 1] += 1
    return profile
