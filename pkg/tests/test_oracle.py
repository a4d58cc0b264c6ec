import pytest

from primalrough.analysis import ORACLE_CAP, oracle_approx
from primalrough.foundation import CapacityError, Universe
from primalrough.instances import FIXTURE_NAMES, random_instances
from primalrough.models import ALL_MODELS, ApproxQuery, ModelId, approximate
from primalrough.primal import empty_set_only, explicit
from primalrough.relations import ALL_KINDS, Kind, Relation

from conftest import S, load


def divergences(inst):
    out = []
    u = inst.universe
    for model in ALL_MODELS:
        p = None if model is ModelId.YAO else inst.primal
        for kind in ALL_KINDS:
            for bits in range(u.mask + 1):
                q = ApproxQuery(model, kind, u.from_bits(bits), inst.relation, p)
                if approximate(q) != oracle_approx(q):
                    out.append((model, kind, bits))
    return out


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_agrees_on_fixtures(name):
    assert divergences(load(name)) == []


def test_agrees_on_seeded_random_instances():
    for inst in random_instances(60, 5, seed=11):
        assert divergences(inst) == [], inst.name


def test_patients_k_under_n3():
    inst = load("patients")
    q = ApproxQuery(ModelId.N3, Kind.A, S(inst, "1", "2", "6"), inst.relation, inst.primal)
    assert oracle_approx(q).accuracy == 1


def test_reduction_on_partial_chain():
    inst = load("partial-chain")
    p0 = empty_set_only(inst.universe)
    for bits in range(16):
        v = inst.universe.from_bits(bits)
        a = oracle_approx(ApproxQuery(ModelId.N1, Kind.A, v, inst.relation, p0))
        b = oracle_approx(ApproxQuery(ModelId.YAO, Kind.A, v, inst.relation))
        assert (a.lower, a.upper) == (b.lower, b.upper)


def test_cap():
    u = Universe.of_size(ORACLE_CAP + 1)
    q = ApproxQuery(ModelId.N1, Kind.A, u.empty(), Relation.empty(u), explicit(u, [[]]))
    with pytest.raises(CapacityError):
        oracle_approx(q)
