from __future__ import annotations

import pytest

import tables as tb
from reslat import validate


def build(spec):
    names, join, meet, prod, impl, bot, top = spec
    ji, mi, pi, ii = tb.index_tables(names, join, meet, prod, impl)
    return validate(names, ji, mi, pi, ii, names.index(bot), names.index(top))


@pytest.fixture(scope="session")
def a7():
    return build(tb.A7)


@pytest.fixture(scope="session")
def chain2():
    return build(tb.CHAIN2)


@pytest.fixture(scope="session")
def chain3():
    return build(tb.CHAIN3)


@pytest.fixture(scope="session")
def chain3n():
    return build(tb.CHAIN3N)


@pytest.fixture(scope="session")
def bool4():
    return build(tb.BOOL4)


@pytest.fixture(scope="session")
def bundled(a7, chain2, chain3, chain3n, bool4):
    return {"a7": a7, "chain2": chain2, "chain3": chain3,
            "chain3n": chain3n, "bool4": bool4}


def mask_of(alg, *names):
    m = 0
    for nm in names:
        m |= 1 << alg.names.index(nm)
    return m


def set_of(alg, mask):
    return frozenset(i for i in range(alg.n) if mask >> i & 1)
