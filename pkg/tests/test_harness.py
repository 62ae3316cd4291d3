"""Tests for the conjecture builders, comparison reports and battery plumbing.

The battery items themselves are exercised one by one in test_acceptance.py;
this file covers the pieces they are made of.
"""

import pytest

from gfrec.cyclotomic import CycInt
from gfrec.funcalg import parse, tau
from gfrec.galois import make_field
from gfrec.harness import (
    PROVED_TRAPEZOID_CASES,
    _Ctx,
    compare,
    criterion_ids,
    rot_conjecture_seq,
    run_criterion,
    trap_conjecture_seq,
)
from gfrec.oracle import sum_sequence
from gfrec.recurrence import Sequence, family_poly, satisfies

F2 = make_field(2)
F3 = make_field(3)


# ---------------------------------------------------------------------------
# conjectured sequences

def test_trap_conjecture_first_values():
    seq = trap_conjecture_seq(3, F2, 8)
    assert seq.n_min == 3
    assert seq.as_integers() == [6, 12, 20, 36, 64, 112]
    # q = 3, k = 2 reduces to t(n) = 3 t(n-2)
    seq3 = trap_conjecture_seq(2, F3, 6)
    assert seq3.as_integers() == [3, 9, 9, 27, 27]


def test_trap_conjecture_matches_brute():
    for q, k, hi in ((2, 3, 12), (2, 4, 12), (3, 2, 8), (3, 3, 8), (4, 2, 6)):
        f = make_field(2, 2) if q == 4 else make_field(q)
        conj = trap_conjecture_seq(k, f, hi)
        brute = sum_sequence(tau(k), f, range(k, hi + 1))
        assert conj.values == brute.values, "q=%d k=%d" % (q, k)


def test_trap_conjecture_satisfies_family_recurrence():
    for f, k in ((F2, 3), (F2, 5), (F3, 3), (make_field(2, 2), 4)):
        seq = trap_conjecture_seq(k, f, k + 12)
        assert satisfies(seq, family_poly("Q_TRAP", k=k, field=f))


def test_rot_conjecture_first_values():
    seq = rot_conjecture_seq(3, 10)
    assert seq.n_min == 3
    # seeds r(0)=3, r(1)=0, r(2)=4 give 6, 8, 20, ...
    assert seq.as_integers()[:3] == [6, 8, 20]
    seq4 = rot_conjecture_seq(4, 8)
    # seeds r(0)=4, r(1)=0, r(2)=4, r(3)=6
    assert seq4.as_integers()[:2] == [16, 20]


def test_rot_conjecture_matches_brute():
    for k, hi in ((3, 13), (4, 13), (5, 14)):
        conj = rot_conjecture_seq(k, hi)
        e = parse("R(%s)" % ",".join(str(i) for i in range(2, k + 1)))
        brute = sum_sequence(e, F2, range(k, hi + 1))
        assert conj.values == brute.values, "k=%d" % k


def test_rot_conjecture_satisfies_family_recurrence():
    for k in (3, 4, 5, 6):
        seq = rot_conjecture_seq(k, k + 14)
        assert satisfies(seq, family_poly("P_K", k=k))


def test_conjecture_builder_validation():
    with pytest.raises(ValueError):
        trap_conjecture_seq(1, F2, 8)
    with pytest.raises(ValueError):
        trap_conjecture_seq(3, F2, 2)
    with pytest.raises(ValueError):
        rot_conjecture_seq(1, 8)
    with pytest.raises(ValueError):
        rot_conjecture_seq(3, 2)


# ---------------------------------------------------------------------------
# comparison reports

def test_compare_proved_case():
    assert PROVED_TRAPEZOID_CASES == (2, 3, 4)
    conj = trap_conjecture_seq(3, F2, 10)
    brute = sum_sequence(tau(3), F2, range(3, 11))
    report = compare(conj, brute, which="trapezoid", k=3, field="2")
    assert report.status == "proved-case"
    assert report.first_disagreement is None
    assert report.checked_range == (3, 10)
    assert report.agreements == 8


def test_compare_verified_on_range():
    conj = trap_conjecture_seq(5, F2, 12)
    brute = sum_sequence(tau(5), F2, range(5, 13))
    report = compare(conj, brute, which="trapezoid", k=5, field="2")
    assert report.status == "verified-on-range"
    # rotations are never promoted to proved-case, whatever k is
    rconj = rot_conjecture_seq(3, 10)
    rbrute = sum_sequence(parse("R(2,3)"), F2, range(3, 11))
    rreport = compare(rconj, rbrute, which="rotation", k=3, field="2")
    assert rreport.status == "verified-on-range"


def test_compare_refuted():
    conj = trap_conjecture_seq(3, F2, 10)
    corrupted = list(conj.values)
    corrupted[4] = corrupted[4] + CycInt.one(2)
    measured = Sequence(conj.n_min, tuple(corrupted), "test")
    report = compare(conj, measured, which="trapezoid", k=3, field="2")
    assert report.status == "refuted"
    n, want, got = report.first_disagreement
    assert n == conj.n_min + 4
    assert want == conj.values[4]
    assert got == corrupted[4]
    assert report.agreements == 4


def test_compare_partial_overlap():
    conj = trap_conjecture_seq(3, F2, 20)
    brute = sum_sequence(tau(3), F2, range(5, 9))
    report = compare(conj, brute, which="trapezoid", k=3, field="2")
    assert report.checked_range == (5, 8)
    assert report.agreements == 4


def test_compare_no_overlap():
    a = trap_conjecture_seq(3, F2, 5)
    b = sum_sequence(tau(3), F2, range(8, 12))
    with pytest.raises(ValueError):
        compare(a, b, which="trapezoid", k=3)


# ---------------------------------------------------------------------------
# battery plumbing

def test_criterion_ids():
    ids = criterion_ids()
    assert ids == ["C%d" % i for i in range(1, 16)]


def test_run_criterion_unknown_id():
    with pytest.raises(ValueError):
        run_criterion("C99")


def test_ctx_fields_and_caps():
    ctx = _Ctx("quick")
    assert ctx.field(4).describe() == "2^2"
    assert ctx.field(9).describe() == "3^2"
    assert ctx.field(5).describe() == "5"
    with pytest.raises(ValueError):
        ctx.field(6)
    # 2^19 is the last power of two within the quick cap of 10^6
    assert ctx.clamp(2, 30) == 19
    assert ctx.clamp(2, 10) == 10
    with pytest.raises(ValueError):
        _Ctx("fast")


def test_ctx_trap_sums_match_plain_brute():
    ctx = _Ctx("quick")
    # packed-bit path
    f2 = ctx.field(2)
    got = ctx.trap_sums(f2, 3, 9)
    want = sum_sequence(tau(3), f2, range(3, 10))
    assert got.values == want.values
    # joint-histogram path
    f3 = ctx.field(3)
    got3 = ctx.trap_sums(f3, 2, 7)
    want3 = sum_sequence(tau(2), f3, range(2, 8))
    assert got3.values == want3.values
    # the shared enumeration is cached
    assert ctx.trap_sums(f3, 2, 7) is got3


def test_acceptance_run_shape_smoke():
    # full battery runs live in test_acceptance.py; here only the report
    # shape for a single cheap item
    entry = run_criterion("C11", profile="quick")
    assert set(entry) == {"id", "status", "expected", "got", "millis"}
    assert entry["id"] == "C11"
    assert entry["status"] in ("pass", "fail")
