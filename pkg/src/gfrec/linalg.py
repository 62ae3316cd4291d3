"""Exact linear algebra over the rationals (internal helpers).

Everything here works on plain Python lists of fractions.Fraction, which is
plenty for the matrix sizes this package needs (a few hundred rows at most)
and keeps all results exact.
"""

from __future__ import annotations

from fractions import Fraction

from .limits import ResourceLimitExceeded


def solve_with_free_zero(rows, rhs):
    """Solve A c = b exactly by Gauss elimination.

    Returns (solution, True) with free variables set to zero, or
    (None, False) when the system is inconsistent.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, m):
            if aug[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if aug[i][ncols] != 0:
            return None, False
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = aug[i][ncols]
    return solution, True


# ---------------------------------------------------------------------------
# polynomials over Q, ascending coefficient lists

def poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_divmod(a, b):
    a = poly_trim([Fraction(x) for x in a])
    b = poly_trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        quot[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] -= factor * bi
        a = poly_trim(a)
    return poly_trim(quot), a


def poly_monic(a):
    a = poly_trim(a)
    if not a:
        return a
    lead = a[-1]
    return [x / lead for x in a]


def poly_gcd(a, b):
    a = poly_trim([Fraction(x) for x in a])
    b = poly_trim([Fraction(x) for x in b])
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return poly_monic(a)


def poly_lcm(a, b):
    a = poly_trim([Fraction(x) for x in a])
    b = poly_trim([Fraction(x) for x in b])
    if not a or not b:
        return []
    g = poly_gcd(a, b)
    q, r = poly_divmod(poly_mul(a, b), g)
    assert not r
    return poly_monic(q)


# ---------------------------------------------------------------------------
# minimal polynomial of an integer matrix

def _mat_vec(matrix, vec):
    dim = len(vec)
    return [
        sum(row[j] * vec[j] for j in range(dim) if vec[j]) for row in matrix
    ]


class _Echelon:
    """Incrementally built reduced row space."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []
        self.pivots = []

    def insert(self, vec):
        """Reduce and insert; returns False when vec was already in the span."""
        vec = [Fraction(x) for x in vec]
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c != 0:
                vec = [a - c * b for a, b in zip(vec, row)]
        for col in range(self.dim):
            if vec[col] != 0:
                lead = vec[col]
                self.rows.append([x / lead for x in vec])
                self.pivots.append(col)
                return True
        return False

    def full(self):
        return len(self.rows) == self.dim


def _local_minimal_poly(matrix, start):
    """Minimal polynomial of matrix relative to a standard basis vector.

    Builds the Krylov chain v, Mv, M^2 v, ... and stops at the first linear
    dependence; the dependence coefficients are the (monic) polynomial.
    Returns (ascending coefficients, chain vectors before the dependence).
    """
    dim = len(matrix)
    raw = [Fraction(0)] * dim
    raw[start] = Fraction(1)
    chain = []
    stored = []  # (reduced vector, combination over chain, pivot)
    d = 0
    while True:
        w = list(raw)
        combo = [Fraction(0)] * d + [Fraction(1)]
        for svec, scombo, spiv in stored:
            c = w[spiv]
            if c != 0:
                w = [a - c * b for a, b in zip(w, svec)]
                for i, sc in enumerate(scombo):
                    combo[i] -= c * sc
        piv = next((i for i, x in enumerate(w) if x != 0), None)
        if piv is None:
            return combo, chain
        lead = w[piv]
        stored.append(
            ([x / lead for x in w], [x / lead for x in combo], piv)
        )
        chain.append(raw)
        raw = _mat_vec(matrix, raw)
        d += 1


def minimal_polynomial(matrix, degree_cap):
    """Monic minimal polynomial of a square rational matrix, ascending
    coefficients, as the lcm of local minimal polynomials over standard
    basis probes (processed in order, stopping once their Krylov chains
    span the whole space)."""
    dim = len(matrix)
    result = [Fraction(1)]
    span = _Echelon(dim)
    probe = [Fraction(0)] * dim
    for start in range(dim):
        probe[start] = Fraction(1)
        fresh = span.insert(probe)
        probe[start] = Fraction(0)
        if not fresh:
            continue
        local, chain = _local_minimal_poly(matrix, start)
        result = poly_lcm(result, local)
        if len(result) - 1 > degree_cap:
            raise ResourceLimitExceeded(
                "minimal polynomial degree exceeds the cap of %d" % degree_cap
            )
        for vec in chain:
            span.insert(vec)
        if span.full():
            break
    return result
