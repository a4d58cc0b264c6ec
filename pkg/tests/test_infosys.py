from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primalrough.infosys import (
    DEFINABLE,
    ROUGH,
    InfoSystemFormatError,
    analyze_decision,
    parse_infosystem,
    patients,
    patients_claims,
    patients_primal,
    subset_relation,
    to_csv,
)
from primalrough.instances import InstanceFormatError
from primalrough.relations import is_reflexive
from primalrough.infosys import parse_claims

K = ["1", "2", "6"]
L = ["3", "4", "5"]


def is_transitive(r):
    pairs = set(r.pairs())
    return all((a, d) in pairs for a, b in pairs for c, d in pairs if b == c)


@pytest.fixture(scope="module")
def system():
    return patients()


def test_attribute_sets(system):
    assert system.held("1") == ["A1", "A2", "A3", "A4"]
    assert system.held("3") == system.held("5") == ["A2", "A4", "A5"]
    assert system.held("4") == ["A1", "A3", "A5"]
    assert system.held("6") == ["A1", "A2", "A4", "A5"]
    classes = system.decision_classes()
    assert system.objects.labels_of(classes["Yes"]) == K
    assert system.objects.labels_of(classes["No"]) == L


def test_subset_relation(system):
    r = subset_relation(system)
    assert is_reflexive(r) and is_transitive(r)
    assert sorted(b for a, b in r.labelled_pairs() if a == "3") == ["3", "5", "6"]
    assert [b for a, b in r.labelled_pairs() if a == "4"] == ["4"]


def test_round_trip(system):
    text = to_csv(system)
    again = parse_infosystem(text)
    assert again == system and to_csv(again) == text


@pytest.mark.parametrize(
    "text,row,col",
    [
        ("Person,A1,Decision\n1,Yes,Yes\n2,maybe,No\n", 3, 2),
        ("Person,A1,Decision\n1,Yes,Yes\n1,No,No\n", 3, 1),
        ("Person,A1,A2\n1,Yes\n", 2, None),
        ("Person,A1,A1\n1,Yes,No\n", 1, 3),
        ("Person,A1\n", 2, None),
    ],
)
def test_located_errors(text, row, col):
    with pytest.raises(InfoSystemFormatError) as info:
        parse_infosystem(text)
    assert (info.value.row, info.value.column) == (row, col)
    assert f"row {row}" in str(info.value)


def test_case_insensitive_cells_and_no_decision():
    s = parse_infosystem("id,a,b\nx,YES,no\ny,yes,Yes\n")
    assert s.decision is None and s.held("x") == ["a"] and s.held("y") == ["a", "b"]


def test_single_row_and_identical_rows():
    one = parse_infosystem("P,A1\nz,No\n")
    assert subset_relation(one).labelled_pairs() == [("z", "z")]
    twins = parse_infosystem("P,A1,A2\nx,Yes,No\ny,Yes,No\n")
    assert len(subset_relation(twins).labelled_pairs()) == 4


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.booleans(), min_size=3, max_size=3), min_size=1, max_size=6))
def test_subset_relation_is_a_preorder(table):
    lines = ["P,A1,A2,A3"] + [f"o{i}," + ",".join("Yes" if b else "No" for b in row) for i, row in enumerate(table)]
    s = parse_infosystem("\n".join(lines) + "\n")
    r = subset_relation(s)
    assert is_reflexive(r) and is_transitive(r)
    assert parse_infosystem(to_csv(s)) == s


def test_yes_class(system):
    rep = analyze_decision(system, K, patients_primal(system), claims=patients_claims(system))
    u = system.objects
    yao, n3 = rep.entry("Yao"), rep.entry("N3")
    assert (u.labels_of(yao.result.lower), u.labels_of(yao.result.upper), yao.result.accuracy) == (K, ["1", "2", "3", "5", "6"], Fraction(3, 5))
    assert yao.classification == ROUGH
    assert n3.classification == DEFINABLE and n3.accuracy_one
    assert [c.status for c in rep.checks] == ["consistent", "consistent"]
    assert any("weak" in n for n in rep.notes)


def test_no_class_flags(system):
    rep = analyze_decision(system, L, patients_primal(system), claims=patients_claims(system))
    u = system.objects
    yao = rep.entry("Yao").result
    assert (u.labels_of(yao.lower), u.labels_of(yao.upper), yao.accuracy) == (["4"], L, Fraction(1, 3))
    n3 = rep.entry("N3")
    assert (u.labels_of(n3.result.lower), u.labels_of(n3.result.upper)) == (["3", "4", "5", "6"], ["4"])
    assert n3.classification == DEFINABLE
    yao_check, n3_check = rep.checks
    assert yao_check.status == "mismatch" and [str(k) for k in yao_check.matching_kinds] == ["u"]
    assert n3_check.status == "mismatch" and not n3_check.self_consistent
    assert n3_check.implied_accuracy == Fraction(2, 3)


def test_claims_filtered_to_requested_models(system):
    rep = analyze_decision(system, L, None, models=["Yao"], claims=patients_claims(system))
    assert [str(c.claim.model) for c in rep.checks] == ["Yao"]


def test_bad_claims(system):
    with pytest.raises(InstanceFormatError):
        parse_claims({"claims": [{"target": ["9"]}]}, system.objects)
