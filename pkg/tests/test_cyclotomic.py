"""Tests for exact arithmetic in Z[zeta_p]."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfrec.cyclotomic import CycInt, regular_matrix, root_power


def test_constructor_validation():
    with pytest.raises(ValueError):
        CycInt(4, (0, 0, 0))
    with pytest.raises(ValueError):
        CycInt(5, (1, 2, 3))
    with pytest.raises(ValueError):
        CycInt(2, ())


def test_from_int_and_as_integer():
    a = CycInt.from_int(7, -12)
    assert a.coeffs == (-12, 0, 0, 0, 0, 0)
    assert a.as_integer() == -12
    b = root_power(7, 2)
    assert b.as_integer() is None
    assert CycInt.zero(5).is_zero()
    assert CycInt.one(5).as_integer() == 1


def test_root_power_relations():
    for p in (2, 3, 5, 7):
        z = root_power(p, 1)
        acc = CycInt.one(p)
        for _ in range(p):
            acc = acc * z
        assert acc == CycInt.one(p), "zeta^p must be 1"
        total = CycInt.zero(p)
        for e in range(p):
            total = total + root_power(p, e)
        assert total.is_zero(), "the p-th roots of unity sum to zero"


def test_top_power_rewrite():
    # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) on the power basis.
    z4 = root_power(5, 4)
    assert z4.coeffs == (-1, -1, -1, -1)


def test_p2_degenerates_to_integers():
    a = CycInt.from_int(2, 5)
    b = CycInt.from_int(2, -3)
    assert (a * b).as_integer() == -15
    assert (a + b).as_integer() == 2
    assert root_power(2, 1).as_integer() == -1
    assert a.conjugate() == a


small_ints = st.integers(min_value=-9, max_value=9)


@settings(max_examples=60, deadline=None)
@given(
    p=st.sampled_from([2, 3, 5]),
    data=st.data(),
)
def test_ring_axioms(p, data):
    vec = st.tuples(*([small_ints] * (p - 1)))
    a = CycInt(p, data.draw(vec))
    b = CycInt(p, data.draw(vec))
    c = CycInt(p, data.draw(vec))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == CycInt.zero(p)
    assert a * CycInt.one(p) == a
    assert -(-a) == a


def test_scalar_multiplication():
    a = root_power(5, 1) + CycInt.from_int(5, 2)
    assert 3 * a == a * 3
    assert (3 * a).coeffs == (6, 3, 0, 0)


def test_conjugate():
    p = 7
    z = root_power(p, 3)
    assert z.conjugate() == root_power(p, -3)
    # conjugation is the Galois map s = p - 1
    a = CycInt(p, (1, -2, 0, 4, 0, 1))
    assert a.conjugate() == a.galois_map(p - 1)
    assert a.conjugate().conjugate() == a
    # z * conj(z) = 1 for any root of unity
    assert (z * z.conjugate()) == CycInt.one(p)


def test_galois_map():
    p = 5
    a = CycInt(p, (2, -1, 3, 0))
    assert a.galois_map(1) == a
    assert a.galois_map(2).galois_map(3) == a.galois_map(6)
    assert a.galois_map(6) == a.galois_map(1)
    with pytest.raises(ValueError):
        a.galois_map(10)
    # the four maps permute the conjugates, so their sum is rational
    total = CycInt.zero(p)
    for s in range(1, p):
        total = total + a.galois_map(s)
    assert total.as_integer() is not None


def test_divide_exact():
    a = CycInt(5, (6, -9, 0, 3))
    assert a.divide_exact(3) == CycInt(5, (2, -3, 0, 1))
    assert a.divide_exact(-3) == CycInt(5, (-2, 3, 0, -1))
    with pytest.raises(ValueError):
        a.divide_exact(4)
    with pytest.raises(ZeroDivisionError):
        a.divide_exact(0)


def test_mixed_orders_rejected():
    a = CycInt.one(3)
    b = CycInt.one(5)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(TypeError):
        a + 1


def _mat_mul(x, y):
    n = len(x)
    return [
        [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def test_regular_matrix_is_a_homomorphism():
    a = CycInt(5, (1, 2, 0, -1))
    b = CycInt(5, (0, 3, -2, 1))
    left = regular_matrix(a * b)
    right = _mat_mul(regular_matrix(a), regular_matrix(b))
    assert left == right
    ident = regular_matrix(CycInt.one(5))
    assert ident == [[1 if i == j else 0 for j in range(4)] for i in range(4)]


def test_record_round_trip():
    a = CycInt(7, (1, -2, 3, 0, 10 ** 40, -5))
    rec = a.to_record()
    assert rec["p"] == 7
    assert all(isinstance(c, str) for c in rec["coeffs"])
    assert CycInt.from_record(rec) == a


def test_to_complex():
    z = root_power(5, 1)
    assert abs(abs(z.to_complex()) - 1.0) < 1e-12
    assert abs(CycInt.from_int(5, 42).to_complex() - 42.0) < 1e-9


def test_hashable():
    seen = {root_power(5, e) for e in range(10)}
    assert len(seen) == 5
