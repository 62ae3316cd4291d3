"""State systems that advance character sums one variable at a time.

Every builder here produces a TransferSystem: a finite family of decorated
sums a_i(n) that is closed under instantiating the newest variable, so that
the vector of states satisfies v(n) = M v(n-1) with entries in Z[zeta_p],
and the target sum is a fixed linear combination of states (possibly at a
shifted index).  Constructed systems are checked against the enumeration
oracle at the smallest index they cover before being returned.

Chain systems decorate a non-wrapping translate sum with monomials pinned
to its trailing window; closing a rotation additionally pins monomials to
the leading window, and the wrap-around translates turn into the projection
coefficients.  Symmetric systems decorate the top elementary symmetric
polynomial with the lower ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .cyclotomic import CycInt, regular_matrix, root_power
from .funcalg import (
    InstantiatedFunction,
    MonomialPattern,
    Rotation,
    ScalarMul,
    Sigma,
    Sum,
    Trapezoid,
    instantiate,
    tau,
)
from .limits import (
    DEFAULT_BLOWUP_LIMIT,
    DEFAULT_DEGREE_CAP,
    DEFAULT_POINT_BUDGET,
    DEFAULT_STATE_LIMIT,
    ResourceLimitExceeded,
)
from .oracle import exp_sum
from .recurrence import IntPolynomial, Sequence


@dataclass(frozen=True)
class TransferSystem:
    label: str
    field: object
    states: tuple
    matrix: tuple  # rows of CycInt entries
    init: tuple  # state vector at index n0
    projection: tuple
    n0: int
    shift: int  # target(n) = projection . v(n - shift)

    @property
    def dim(self):
        return len(self.states)

    @property
    def n_min(self):
        return self.n0 + self.shift

    def __repr__(self):
        return "TransferSystem(%s, dim=%d, n_min=%d)" % (self.label, self.dim, self.n_min)


def step(sys, v):
    """Apply the one-variable update to a state vector."""
    if len(v) != sys.dim:
        raise ValueError("state vector has length %d, expected %d" % (len(v), sys.dim))
    out = []
    for row in sys.matrix:
        acc = CycInt.zero(sys.field.p)
        for entry, value in zip(row, v):
            if not entry.is_zero():
                acc = acc + entry * value
        out.append(acc)
    return out


def _project(sys, v):
    acc = CycInt.zero(sys.field.p)
    for c, value in zip(sys.projection, v):
        if not c.is_zero():
            acc = acc + c * value
    return acc


def run(sys, n_target):
    """Projected target values for n = n_min .. n_target, exactly."""
    if n_target < sys.n_min:
        raise ValueError("n_target below the system's first index %d" % sys.n_min)
    v = list(sys.init)
    out = [_project(sys, v)]
    for _ in range(sys.n_min + 1, n_target + 1):
        v = step(sys, v)
        out.append(_project(sys, v))
    return Sequence(sys.n_min, tuple(out), "transfer")


# ---------------------------------------------------------------------------
# small helpers shared by the builders

def _index_tables(field):
    elems = field.elements()
    q = field.q
    add = [[(a + b).index for b in elems] for a in elems]
    mul = [[(a * b).index for b in elems] for a in elems]
    trace = [a.trace() for a in elems]
    return elems, add, mul, trace


def _accumulate(acc, mono, coeff):
    cur = acc.get(mono)
    acc[mono] = coeff if cur is None else cur + coeff


def _oracle_gate(sys, target_function, budget):
    got = run(sys, sys.n_min).values[-1]
    want = exp_sum(target_function, budget=budget)
    if got != want:
        raise AssertionError(
            "transfer system %r disagrees with the oracle at n=%d: %r vs %r"
            % (sys.label, sys.n_min, got, want)
        )


# ---------------------------------------------------------------------------
# consecutive trapezoid: the k-state system of boundary-decorated sums

def build_trapezoid_system(k, f, budget=DEFAULT_POINT_BUDGET):
    """States b_j(n) = S(T(2..k)(n) + X_n + X_n X_{n-1} + ... (j products)).

    All boundary products carry coefficient one; scaling invariance of the
    decorated sums folds the unit choices together, which is what makes a
    single state per decoration depth enough.  The update is integral:
        b_j(n) = b_0(n-1) + (q-1) b_{j+1}(n-1)   for j < k-1,
        b_{k-1}(n) = b_0(n-1) - b_{k-1}(n-1).
    """
    if k < 2:
        raise ValueError("need k >= 2")
    p = f.p
    q = f.q
    one = CycInt.one(p)
    rows = []
    for j in range(k):
        row = [CycInt.zero(p)] * k
        row[0] = one
        if j < k - 1:
            row[j + 1] = CycInt.from_int(p, q - 1)
        else:
            row[k - 1] = row[k - 1] + CycInt.from_int(p, -1)
        rows.append(tuple(row))
    init = []
    for j in range(k):
        acc = {}
        _accumulate(acc, frozenset(range(1, k + 1)), f.one())
        for s in range(1, j + 1):
            _accumulate(acc, frozenset(range(s + 1, k + 1)), f.one())
        g = InstantiatedFunction(f, k, acc)
        init.append(exp_sum(g, budget=budget))
    projection = [one] + [CycInt.zero(p)] * (k - 1)
    states = tuple("b%d" % j for j in range(k))
    sys = TransferSystem(
        label="trapezoid(2..%d)/F_%s" % (k, f.describe()),
        field=f,
        states=states,
        matrix=tuple(rows),
        init=tuple(init),
        projection=tuple(projection),
        n0=k,
        shift=0,
    )
    _oracle_gate(sys, instantiate(tau(k), k, f), budget)
    return sys


# ---------------------------------------------------------------------------
# window-decorated chain engine (general trapezoids, rotations, mixtures)

def _sh1(offsets):
    w = max(offsets)
    return frozenset(w - 1 - o for o in offsets if o != w)


def _age(shape):
    return frozenset(d - 1 for d in shape if d >= 1)


def _tail_shapes(patterns):
    shapes = []
    seen = set()
    for _c, offsets in patterns:
        shape = _sh1(offsets)
        while shape:
            if shape not in seen:
                seen.add(shape)
                shapes.append(shape)
            shape = _age(shape)
    return shapes


def _head_shapes(patterns):
    shapes = []
    seen = set()
    for _c, offsets in patterns:
        wi = max(offsets)
        for m in range(1, wi):
            shape = frozenset(m + o - wi for o in offsets if o > wi - m)
            if shape and shape not in seen:
                seen.add(shape)
                shapes.append(shape)
    return shapes


def _normalize_patterns(terms, f):
    """Merge (coefficient, offsets) terms, dropping cancelled patterns."""
    merged = {}
    for coeff, offsets in terms:
        offsets = tuple(offsets)
        cur = merged.get(offsets, f.zero())
        merged[offsets] = cur + coeff
    out = [
        (coeff, offsets)
        for offsets, coeff in sorted(merged.items())
        if not coeff.is_zero()
    ]
    if not out:
        raise ValueError("all pattern terms cancelled")
    return out


def _chain_function(f, n, patterns, tail_shapes, head_shapes, alpha, beta, elems):
    acc = {}
    for c, offsets in patterns:
        wi = max(offsets)
        for t in range(n - wi + 1):
            _accumulate(acc, frozenset(o + t for o in offsets), c)
    for j, shape in enumerate(tail_shapes):
        a = elems[alpha[j]]
        if not a.is_zero():
            _accumulate(acc, frozenset(n - d for d in shape), a)
    for j, shape in enumerate(head_shapes):
        b = elems[beta[j]]
        if not b.is_zero():
            _accumulate(acc, frozenset(shape), b)
    return InstantiatedFunction(f, n, acc)


def _build_window_system(
    terms, f, wrap, label, state_limit=DEFAULT_STATE_LIMIT, budget=DEFAULT_POINT_BUDGET
):
    """Shared engine: decorated chain states, optionally closed into a
    rotation by head decorations plus wrap-around projection."""
    p = f.p
    q = f.q
    patterns = _normalize_patterns(terms, f)
    w = max(max(offsets) for _c, offsets in patterns)
    if w < 2:
        raise ValueError("window width below 2")
    tail_shapes = _tail_shapes(patterns)
    head_shapes = _head_shapes(patterns) if wrap else []
    tail_index = {shape: i for i, shape in enumerate(tail_shapes)}
    head_index = {shape: i for i, shape in enumerate(head_shapes)}
    nt, nh = len(tail_shapes), len(head_shapes)
    dim = q ** (nt + nh)
    if dim > state_limit:
        raise ResourceLimitExceeded(
            "%d states exceed the limit of %d" % (dim, state_limit)
        )
    elems, add, mul, trace = _index_tables(f)

    states = list(product(range(q), repeat=nt + nh))
    state_index = {s: i for i, s in enumerate(states)}

    zero = CycInt.zero(p)
    rows = [[zero] * dim for _ in range(dim)]
    for row_i, state in enumerate(states):
        alpha, beta = state[:nt], state[nt:]
        for x in range(q):
            new_alpha = [0] * nt
            const = 0
            for j, shape in enumerate(tail_shapes):
                a = alpha[j]
                if a == 0:
                    continue
                factor = mul[a][x] if 0 in shape else a
                aged = _age(shape)
                if aged:
                    slot = tail_index[aged]
                    new_alpha[slot] = add[new_alpha[slot]][factor]
                else:
                    const = add[const][factor]
            for c, offsets in patterns:
                slot = tail_index[_sh1(offsets)]
                new_alpha[slot] = add[new_alpha[slot]][mul[c.index][x]]
            col = state_index[tuple(new_alpha) + beta]
            rows[row_i][col] = rows[row_i][col] + root_power(p, trace[const])

    n0 = 2 * (w - 1) if wrap else w
    shift = (w - 1) if wrap else 0

    init = [
        exp_sum(
            _chain_function(
                f, n0, patterns, tail_shapes, head_shapes, s[:nt], s[nt:], elems
            ),
            budget=budget,
        )
        for s in states
    ]

    projection = [zero] * dim
    if not wrap:
        projection[state_index[(0,) * (nt + nh)]] = CycInt.one(p)
    else:
        n_ref = n0 + shift
        for y in product(range(q), repeat=w - 1):
            # y[d] is the value index of the variable at position n_ref - d
            alpha = [0] * nt
            beta = [0] * nh
            const = 0
            skip = False
            for c, offsets in patterns:
                wi = max(offsets)
                for i in range(n_ref - w - wi + 3, n_ref + 1):
                    coeff = c.index
                    chain_depths = []
                    head_positions = []
                    for o in offsets:
                        pos = i + o - 1
                        if pos > n_ref:
                            head_positions.append(pos - n_ref)
                        elif pos >= n_ref - w + 2:
                            coeff = mul[coeff][y[n_ref - pos]]
                        else:
                            chain_depths.append((n_ref - w + 1) - pos)
                    if coeff == 0:
                        continue
                    if chain_depths:
                        slot = tail_index[frozenset(chain_depths)]
                        alpha[slot] = add[alpha[slot]][coeff]
                    elif head_positions:
                        slot = head_index[frozenset(head_positions)]
                        beta[slot] = add[beta[slot]][coeff]
                    else:
                        const = add[const][coeff]
            target = state_index[tuple(alpha) + tuple(beta)]
            projection[target] = projection[target] + root_power(p, trace[const])

    def describe(state):
        alpha, beta = state[:nt], state[nt:]
        text = "alpha=%s" % (list(alpha),)
        if nh:
            text += ";beta=%s" % (list(beta),)
        return "a[%s]" % text

    sys = TransferSystem(
        label=label,
        field=f,
        states=tuple(describe(s) for s in states),
        matrix=tuple(tuple(r) for r in rows),
        init=tuple(init),
        projection=tuple(projection),
        n0=n0,
        shift=shift,
    )

    target_fn = _target_function(f, sys.n_min, patterns, wrap)
    _oracle_gate(sys, target_fn, budget)
    return sys, states, patterns, tail_shapes


def _target_function(f, n, patterns, wrap):
    acc = {}
    for c, offsets in patterns:
        if wrap:
            for i in range(n):
                _accumulate(
                    acc, frozenset((i + o - 1) % n + 1 for o in offsets), c
                )
        else:
            wi = max(offsets)
            for t in range(n - wi + 1):
                _accumulate(acc, frozenset(o + t for o in offsets), c)
    return InstantiatedFunction(f, n, acc)


def build_rotation_system(
    pattern,
    f,
    collapse=False,
    state_limit=DEFAULT_STATE_LIMIT,
    budget=DEFAULT_POINT_BUDGET,
):
    """Transfer system for the cyclic translate sum of a monomial pattern.

    With collapse=True, consecutive patterns get their unit-scaled boundary
    states folded together (verified against the uncollapsed system before
    the smaller one is returned).
    """
    if isinstance(pattern, MonomialPattern):
        offsets = pattern.offsets
    else:
        offsets = MonomialPattern(tuple(pattern)).offsets
    label = "rotation(%s)/F_%s" % (",".join(map(str, offsets[1:])), f.describe())
    sys, states, patterns, tail_shapes = _build_window_system(
        [(f.one(), offsets)], f, True, label, state_limit, budget
    )
    if collapse:
        sys = _collapse_unit_boundary(sys, states, patterns, tail_shapes, f)
    return sys


def _collapse_unit_boundary(sys, states, patterns, tail_shapes, f):
    """Fold states that scaling invariance proves equal.

    Applies to a single consecutive pattern with coefficient one: states
    whose head decorations vanish and whose tail coefficients are units on
    the first j shapes (zero beyond) coincide for every unit choice.  The
    folded system is replayed against the original over a verification
    window before being accepted.
    """
    if len(patterns) != 1:
        return sys
    coeff, offsets = patterns[0]
    k = len(offsets)
    if offsets != tuple(range(1, k + 1)) or coeff != f.one():
        return sys
    q = f.q
    nt = len(tail_shapes)
    units = [e.index for e in f.units()]
    one = f.one().index

    class_of = {}
    for j in range(1, nt + 1):
        rep = tuple([one] * j + [0] * (nt - j)) + (0,) * (len(states[0]) - nt)
        members = [
            tuple(list(us) + [0] * (nt - j)) + (0,) * (len(states[0]) - nt)
            for us in product(units, repeat=j)
        ]
        for m in members:
            class_of[m] = rep
    reps = []
    for s in states:
        rep = class_of.get(s, s)
        if rep not in reps:
            reps.append(rep)
    rep_index = {s: i for i, s in enumerate(reps)}
    old_index = {s: i for i, s in enumerate(states)}

    p = f.p
    zero = CycInt.zero(p)
    new_rows = []
    for rep in reps:
        old_row = sys.matrix[old_index[rep]]
        row = [zero] * len(reps)
        for s in states:
            entry = old_row[old_index[s]]
            if not entry.is_zero():
                tgt = rep_index[class_of.get(s, s)]
                row[tgt] = row[tgt] + entry
        new_rows.append(tuple(row))
    new_init = tuple(sys.init[old_index[rep]] for rep in reps)
    new_proj = [zero] * len(reps)
    for s in states:
        c = sys.projection[old_index[s]]
        if not c.is_zero():
            tgt = rep_index[class_of.get(s, s)]
            new_proj[tgt] = new_proj[tgt] + c

    folded = TransferSystem(
        label=sys.label + "/folded",
        field=f,
        states=tuple(sys.states[old_index[rep]] for rep in reps),
        matrix=tuple(new_rows),
        init=new_init,
        projection=tuple(new_proj),
        n0=sys.n0,
        shift=sys.shift,
    )
    horizon = sys.n_min + sys.dim + 4
    if run(folded, horizon).values != run(sys, horizon).values:
        raise AssertionError("folded system diverged from the original")
    return folded


# ---------------------------------------------------------------------------
# elementary symmetric systems

def build_symmetric_system(
    k, f, state_limit=DEFAULT_STATE_LIMIT, budget=DEFAULT_POINT_BUDGET
):
    """States S(sigma_k + sum_j beta_j sigma_(k-j)) for beta in F_q^(k-1).

    Instantiating the newest variable maps sigma_(n,j) to
    sigma_(n-1,j) + x sigma_(n-1,j-1), so each state scatters to exactly q
    states one variable down, with a character factor from the constant
    term beta_(k-1) x.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    p = f.p
    q = f.q
    dim = q ** (k - 1)
    if dim > state_limit:
        raise ResourceLimitExceeded(
            "%d states exceed the limit of %d" % (dim, state_limit)
        )
    elems, add, mul, trace = _index_tables(f)
    states = list(product(range(q), repeat=k - 1))
    state_index = {s: i for i, s in enumerate(states)}
    zero = CycInt.zero(p)
    rows = [[zero] * dim for _ in range(dim)]
    for row_i, beta in enumerate(states):
        for x in range(q):
            # the new top decoration is x + beta_1, and each beta_j shifts
            # down to beta_j * x + beta_(j+1)
            image = [add[x][beta[0]]]
            for j in range(1, k - 1):
                image.append(add[mul[beta[j - 1]][x]][beta[j]])
            const = mul[beta[k - 2]][x]
            col = state_index[tuple(image)]
            rows[row_i][col] = rows[row_i][col] + root_power(p, trace[const])
    init = []
    for beta in states:
        acc = {}
        _accumulate(acc, frozenset(range(1, k + 1)), f.one())
        for j in range(1, k):
            b = elems[beta[j - 1]]
            if b.is_zero():
                continue
            for combo in combinations(range(1, k + 1), k - j):
                _accumulate(acc, frozenset(combo), b)
        init.append(exp_sum(InstantiatedFunction(f, k, acc), budget=budget))
    projection = [zero] * dim
    projection[state_index[(0,) * (k - 1)]] = CycInt.one(p)
    sys = TransferSystem(
        label="symmetric(%d)/F_%s" % (k, f.describe()),
        field=f,
        states=tuple("a%s" % (list(s),) for s in states),
        matrix=tuple(tuple(r) for r in rows),
        init=tuple(init),
        projection=tuple(projection),
        n0=k,
        shift=0,
    )
    _oracle_gate(sys, instantiate(Sigma(k), k, f), budget)
    return sys


def build_quadratic_matrix(p, budget=DEFAULT_POINT_BUDGET):
    """The p-state system for S(sigma_2 + s sigma_1) over a prime field,
    whose matrix has (j, k) entry zeta^(j(k-j))."""
    from .galois import is_prime, make_field

    if not is_prime(p) or p == 2:
        raise ValueError("need an odd prime, got %r" % (p,))
    f = make_field(p)
    zero = CycInt.zero(p)
    rows = []
    for j in range(p):
        row = [zero] * p
        for k_col in range(p):
            row[k_col] = root_power(p, j * (k_col - j))
        rows.append(tuple(row))
    init = []
    for s in range(p):
        acc = {}
        _accumulate(acc, frozenset({1, 2}), f.one())
        if s:
            se = f.from_index(s)
            _accumulate(acc, frozenset({1}), se)
            _accumulate(acc, frozenset({2}), se)
        init.append(exp_sum(InstantiatedFunction(f, 2, acc), budget=budget))
    projection = [zero] * p
    projection[0] = CycInt.one(p)
    sys = TransferSystem(
        label="quadratic/F_%d" % p,
        field=f,
        states=tuple("a[s=%d]" % s for s in range(p)),
        matrix=tuple(rows),
        init=tuple(init),
        projection=tuple(projection),
        n0=2,
        shift=0,
    )
    _oracle_gate(sys, instantiate(Sigma(2), 2, f), budget)
    return sys


# ---------------------------------------------------------------------------
# integer annihilators

def integer_annihilator(
    sys, degree_cap=DEFAULT_DEGREE_CAP, blowup_limit=DEFAULT_BLOWUP_LIMIT
):
    """Monic integer polynomial annihilating the transfer matrix.

    Each cyclotomic entry is replaced by its integer multiplication matrix
    on the power basis, and the minimal polynomial of the inflated matrix
    is computed exactly.  Because inflation is a ring homomorphism, the
    result annihilates the original matrix and every projected sequence.
    """
    e = sys.field.p - 1
    dim = sys.dim * e
    if dim > blowup_limit:
        raise ResourceLimitExceeded(
            "inflated dimension %d exceeds the limit of %d" % (dim, blowup_limit)
        )
    big = [[0] * dim for _ in range(dim)]
    for i, row in enumerate(sys.matrix):
        for j, entry in enumerate(row):
            if entry.is_zero():
                continue
            block = regular_matrix(entry)
            for a in range(e):
                for b in range(e):
                    big[i * e + a][j * e + b] = block[a][b]
    from .linalg import minimal_polynomial

    coeffs = minimal_polynomial(big, degree_cap)
    ints = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("minimal polynomial of an integer matrix not integral")
        ints.append(int(c))
    return IntPolynomial(ints)


# ---------------------------------------------------------------------------
# expression dispatch

def _flatten(e, f, coeff, out):
    if isinstance(e, Sum):
        for part in e.parts:
            _flatten(part, f, coeff, out)
    elif isinstance(e, ScalarMul):
        _flatten(e.expr, f, coeff * f.from_index(e.scalar_index), out)
    else:
        out.append((coeff, e))


def system_for(e, f, state_limit=DEFAULT_STATE_LIMIT, budget=DEFAULT_POINT_BUDGET):
    """Build the transfer system matching an expression.

    Single sigma(k) nodes, single trapezoid or rotation patterns, and
    linear combinations of same-kind translate families are supported.
    """
    parts = []
    _flatten(e, f, f.one(), parts)
    parts = [(c, node) for c, node in parts if not c.is_zero()]
    if not parts:
        raise ValueError("expression is zero")
    if len(parts) == 1 and isinstance(parts[0][1], Sigma):
        c, node = parts[0]
        if c != f.one():
            raise ValueError("scaled sigma is not supported by the transfer method")
        if node.k < 2:
            raise ValueError("transfer needs sigma(k) with k >= 2")
        return build_symmetric_system(node.k, f, state_limit, budget)
    kinds = {type(node) for _c, node in parts}
    if kinds == {Trapezoid}:
        terms = [(c, node.pattern.offsets) for c, node in parts]
        if len(terms) == 1 and terms[0][0] == f.one():
            offsets = terms[0][1]
            k = len(offsets)
            if offsets == tuple(range(1, k + 1)):
                return build_trapezoid_system(k, f, budget)
        label = "chain[%s]/F_%s" % (
            " + ".join("T(%s)" % ",".join(map(str, o[1:])) for _c, o in terms),
            f.describe(),
        )
        sys, _, _, _ = _build_window_system(terms, f, False, label, state_limit, budget)
        return sys
    if kinds == {Rotation}:
        terms = [(c, node.pattern.offsets) for c, node in parts]
        label = "rotation[%s]/F_%s" % (
            " + ".join("R(%s)" % ",".join(map(str, o[1:])) for _c, o in terms),
            f.describe(),
        )
        sys, _, _, _ = _build_window_system(terms, f, True, label, state_limit, budget)
        return sys
    raise ValueError(
        "transfer supports sigma(k), trapezoid combinations or rotation "
        "combinations, not %r" % (sorted(t.__name__ for t in kinds),)
    )
