from __future__ import annotations

import pytest

import tables as tb
from conftest import build
from reslat import PreconditionError
from reslat.suite import registry_groups, registry_idents, verify_suite


@pytest.mark.parametrize("key", sorted(tb.ALL_TABLES))
def test_every_statement_passes(key):
    alg = build(tb.ALL_TABLES[key])
    reports = verify_suite(alg)
    assert tuple(r.ident for r in reports) == registry_idents()
    failed = [r.ident for r in reports if not r.passed]
    assert failed == []


def test_single_element_suite():
    alg = build((("u",), [["u"]], [["u"]], [["u"]], [["u"]], "u", "u"))
    assert all(r.passed for r in verify_suite(alg))


def test_registry_well_formed():
    idents = registry_idents()
    assert len(idents) == len(set(idents))
    assert len(idents) == 44
    assert registry_groups() == ("arithmetic", "filters", "spectrum",
                                 "coannihilators", "maps", "classification",
                                 "alpha", "topology")


def test_a7_equivalence_sides(a7):
    by_ident = {r.ident: r for r in verify_suite(a7)}
    disj = by_ident["disjunctive-equivalences"]
    assert disj.passed
    assert {v for _, v in disj.sides} == {False}
    qc = by_ident["quasicomplemented-equivalences"]
    assert {v for _, v in qc.sides} == {True}
    assert len(qc.sides) == 7
    flb = by_ident["boolean-filter-lattice-equivalence"]
    assert {v for _, v in flb.sides} == {False}
    implied = by_ident["disjunctive-implies-weakly"]
    assert implied.passed
    assert dict(implied.sides) == {"disjunctive": False,
                                   "weakly disjunctive": False}


def test_chain3n_filter_lattice_boolean_sides(chain3n):
    by_ident = {r.ident: r for r in verify_suite(chain3n)}
    flb = by_ident["boolean-filter-lattice-equivalence"]
    assert {v for _, v in flb.sides} == {True}
    lb = by_ident["boolean-element-lattice-equivalence"]
    assert {v for _, v in lb.sides} == {False}
    wdisj = by_ident["weakly-disjunctive-equivalences"]
    assert wdisj.passed and {v for _, v in wdisj.sides} == {True}


def test_law_witness_mentions_instance_count(chain2):
    by_ident = {r.ident: r for r in verify_suite(chain2)}
    principality = by_ident["finite-principality"]
    assert principality.passed
    assert "checked" in principality.witness


def test_selection_by_ident(a7):
    reports = verify_suite(a7, idents=("finite-principality",
                                       "coannihilator-galois"))
    assert tuple(r.ident for r in reports) == ("finite-principality",
                                               "coannihilator-galois")
    with pytest.raises(PreconditionError):
        verify_suite(a7, idents=("no-such-statement",))


def test_selection_by_group(a7):
    reports = verify_suite(a7, groups=("alpha",))
    assert reports
    assert all(r.ident.startswith(("alpha", "transfer", "prime-alpha"))
               for r in reports)
    with pytest.raises(PreconditionError):
        verify_suite(a7, groups=("no-such-group",))


def test_reports_deterministic(a7):
    assert verify_suite(a7) == verify_suite(a7)
