import pytest

from primalrough.analysis import Category, Verdict, catalog, check_laws, refuted
from primalrough.analysis.laws import REGISTRY, Env, evaluate, recheck, resolve
from primalrough.foundation import CapacityError, StructuralError, Universe
from primalrough.instances import FIXTURE_NAMES, random_instances
from primalrough.primal import explicit
from primalrough.relations import Relation

from conftest import load


def test_catalog_shape():
    ids = [law.id for law in catalog()]
    assert len(ids) == len(set(ids)) >= 40
    assert all(law.category is Category.CATALOG for law in catalog())
    assert {"N1-duality", "N3-duality", "N4-duality", "reflexive-N2-N1-N3-chain", "Yao-N1-accuracy"} <= set(ids)
    # the printed directions that fail are kept apart
    assert "N3-kind-chain" in {law.id for law in refuted()}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_catalog_holds_on_fixtures(name):
    inst = load(name)
    reports = check_laws(inst.relation, inst.primal, aux=inst.aux, instance=name)
    assert [r for r in reports if r.verdict is Verdict.FAILS] == []


def test_catalog_holds_on_random_instances():
    for inst in random_instances(40, 4, seed=3):
        reports = check_laws(inst.relation, inst.primal, aux=inst.aux, instance=inst.name)
        assert [r.law for r in reports if r.verdict is Verdict.FAILS] == [], inst.name


def test_precondition_gates():
    chain = load("partial-chain")
    (rep,) = check_laws(chain.relation, chain.primal, ["reflexive-N2-N1-N3-chain"])
    assert rep.verdict is Verdict.SKIPPED and "reflexive" in rep.reason
    cyc = load("reflexive-cycle")
    (rep,) = check_laws(cyc.relation, cyc.primal, ["reflexive-N2-N1-N3-chain"])
    assert rep.verdict is Verdict.HOLDS and rep.checked == 64
    u = Universe.of_size(2)
    (rep,) = check_laws(Relation.identity(u), explicit(u, []), ["Yao-N1-containment"])
    assert rep.verdict is Verdict.SKIPPED


def test_upper_intersection_equality_fails_on_star_symmetric():
    inst = load("star-symmetric")
    rep = evaluate(REGISTRY["N1-upper-intersection-equality"], Env(inst.relation, inst.primal), instance="star-symmetric")
    assert rep.verdict is Verdict.FAILS
    assert recheck(REGISTRY["N1-upper-intersection-equality"], inst.relation, inst.primal, None, rep.witness) is False


@pytest.mark.parametrize(
    "law_id,name",
    [
        ("maximal-primal-lower-empty", "partial-chain"),
        ("maximal-primal-upper-empty-everywhere", "reflexive-cycle"),
        ("N3-kind-chain", "star-symmetric"),
        ("N1-primal-boundary-as-printed", "partial-chain"),
        ("Yao-N1-accuracy-unrestricted", "partial-chain"),
    ],
)
def test_refuted_statements_have_witnesses(law_id, name):
    inst = load(name)
    law = REGISTRY[law_id]
    rep = evaluate(law, Env(inst.relation, inst.primal, inst.aux), instance=name)
    assert rep.verdict is Verdict.FAILS
    assert not recheck(law, inst.relation, inst.primal, inst.aux, rep.witness)


def test_refuted_union_equality_has_a_random_witness():
    law = REGISTRY["N4-primal-union-lower-equality"]
    hits = [
        inst.name
        for inst in random_instances(20, 5, 20240601)
        if evaluate(law, Env(inst.relation, inst.primal, inst.aux)).verdict is Verdict.FAILS
    ]
    assert hits


def test_witness_dict():
    inst = load("star-symmetric")
    env = Env(inst.relation, inst.primal)
    rep = evaluate(REGISTRY["N1-upper-intersection-equality"], env)
    d = rep.as_dict(env)
    assert d["verdict"] == "Fails" and set(d["witness"]) >= {"V", "W", "kind"}


def test_unknown_law():
    with pytest.raises(StructuralError):
        resolve(["no-such-law"])


def test_enumeration_cap():
    u = Universe.of_size(21)
    with pytest.raises(CapacityError):
        Env(Relation.empty(u), explicit(u, [[]]))
