import pytest

from primalrough.analysis import SearchBounds, companion_report, search_counterexample
from primalrough.analysis.laws import Verdict
from primalrough.analysis.nonproperties import TARGETS, remark_targets
from primalrough.analysis.search import downsets, primals_of, relations_of
from primalrough.foundation import CapacityError, StructuralError, Universe
from primalrough.primal import Level

# provable by downward closure: w & V sits inside V
PROVABLE = {"N4-complement-member-lower-full", "N4-member-upper-empty"}


def test_downsets_count():
    # proper down-sets containing the empty set: 1, 2, 5, 19 for n = 1..4
    assert [len(downsets(n)) for n in range(1, 5)] == [1, 4, 18, 166]


def test_strict_level_filters():
    u = Universe.of_size(3)
    assert len(primals_of(u, Level.STRICT)) < len(primals_of(u, Level.WEAK))
    assert all(p.is_strict() for p in primals_of(u, Level.STRICT))


def test_relation_order():
    rels = list(relations_of(Universe.of_size(2)))
    assert len(rels) == 16 and rels[0].pairs() == [] and rels[1].pairs() == [(0, 0)]


@pytest.mark.parametrize("tid", sorted(t.id for t in TARGETS.values() if t.id not in PROVABLE))
def test_every_target_has_a_small_witness(tid):
    rep = search_counterexample(tid, SearchBounds(max_size=3))
    assert rep.found and rep.confirm()


@pytest.mark.parametrize("tid", sorted(t.id for t in TARGETS.values() if t.id not in PROVABLE))
def test_companion_fixture_witnesses(tid):
    assert companion_report(tid).verdict is Verdict.FAILS


def test_search_is_deterministic():
    a = search_counterexample("N1-upper-idempotence", SearchBounds(max_size=3))
    b = search_counterexample("N1-upper-idempotence", SearchBounds(max_size=3))
    assert a.as_dict() == b.as_dict()


def test_exhaustion():
    rep = search_counterexample("N1-lower-idempotence", SearchBounds(max_size=1))
    assert not rep.found and rep.examined == 2 and not rep.confirm()
    for tid in PROVABLE:
        rep = search_counterexample(tid, SearchBounds(max_size=2))
        assert not rep.found and rep.examined == 66


def test_instance_budget():
    rep = search_counterexample("N4-member-upper-empty", SearchBounds(max_size=3, max_instances=10))
    assert rep.examined == 10 and not rep.found


def test_random_phase_only_with_seed():
    rep = search_counterexample("N4-member-upper-empty", SearchBounds(max_size=2, seed=5, random_draws=30))
    assert rep.examined == 66 + 30 and not rep.found


def test_two_primal_witness_names_the_second_primal():
    rep = search_counterexample("N1-accuracy-primal-invariant", SearchBounds(max_size=3))
    assert "Q" in rep.instance.aux and rep.as_dict()["instance"]["aux"]


def test_bounds_and_ids():
    with pytest.raises(CapacityError):
        SearchBounds(max_size=6)
    with pytest.raises(StructuralError):
        search_counterexample("no-such-target")


def test_remark_group():
    ids = {t.id for t in remark_targets()}
    assert {"N1-contraction", "N2-duality", "N3-upper-empty-on-empty", "N4-upper-idempotence"} <= ids
    assert "N1-lower-union-equality" not in ids
