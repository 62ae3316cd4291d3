"""The acceptance battery, one test per criterion at the full profile.

`pytest -v` therefore shows one pass/fail line per criterion; each test
prints the expected/got detail, which pytest surfaces on failure.  The
battery context is shared across the module so brute enumerations are done
once.
"""

import pytest

from gfrec.harness import _Ctx, criterion_ids, run_criterion


@pytest.fixture(scope="module")
def ctx():
    return _Ctx("full")


def _run(cid, ctx):
    entry = run_criterion(cid, ctx=ctx)
    print("%s expected: %s" % (cid, entry["expected"]))
    print("%s got:      %s" % (cid, entry["got"]))
    assert entry["status"] == "pass", entry


def test_battery_covers_all_ids():
    assert criterion_ids() == ["C%d" % i for i in range(1, 16)]


def test_c1(ctx):
    _run("C1", ctx)


def test_c2(ctx):
    _run("C2", ctx)


def test_c3(ctx):
    _run("C3", ctx)


def test_c4(ctx):
    _run("C4", ctx)


def test_c5(ctx):
    _run("C5", ctx)


def test_c6(ctx):
    _run("C6", ctx)


def test_c7(ctx):
    _run("C7", ctx)


def test_c8(ctx):
    _run("C8", ctx)


def test_c9(ctx):
    _run("C9", ctx)


def test_c10(ctx):
    _run("C10", ctx)


def test_c11(ctx):
    _run("C11", ctx)


def test_c12(ctx):
    _run("C12", ctx)


def test_c13(ctx):
    _run("C13", ctx)


def test_c14(ctx):
    _run("C14", ctx)


def test_c15(ctx):
    _run("C15", ctx)
