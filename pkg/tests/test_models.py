"""Operator values checked against the worked examples each fixture reproduces."""

from fractions import Fraction

import pytest

from primalrough.foundation import UNDEFINED, CapacityError, StructuralError, Universe
from primalrough.models import ApproxQuery, ModelId, approx, approximation_table
from primalrough.primal import empty_set_only, explicit
from primalrough.relations import ALL_KINDS, Kind, Relation

from conftest import S, load


def run(name, model, target, kind="a", primal=None):
    inst = load(name)
    p = inst.primal if primal is None else inst.aux[primal]
    return approx(inst.relation, p, model, kind, S(inst, *target))


def U(name):
    return load(name).universe.full()


def test_partial_chain_n1():
    assert run("partial-chain", "N1", ["i1", "i2", "i3"]).lower == U("partial-chain")
    assert run("partial-chain", "N1", ["i3", "i4"]).lower == S(load("partial-chain"), "i2", "i3", "i4")
    assert run("partial-chain", "N1", ["i3", "i4"]).upper == S(load("partial-chain"))


def test_partial_chain_accuracy_drops_with_smaller_primal():
    assert run("partial-chain", "N1", ["i3", "i4"]).accuracy == 1
    assert run("partial-chain", "N1", ["i3", "i4"], primal="P1").accuracy == Fraction(2, 3)


def test_star_symmetric_n1():
    inst = load("star-symmetric")
    assert run("star-symmetric", "N1", ["i1", "i2"]).upper == S(inst, "i1", "i2", "i4")
    assert run("star-symmetric", "N1", ["i1", "i3"]).upper == S(inst, "i1", "i3")
    # the meet of the two uppers is {i1}, but the upper of the meet is empty
    assert run("star-symmetric", "N1", ["i1"]).upper == S(inst)
    assert run("star-symmetric", "N1", ["i1", "i3"]).lower == S(inst, "i3")
    assert run("star-symmetric", "N1", ["i1", "i4"]).lower == S(inst)


def test_sparse_loop_n1():
    inst = load("sparse-loop")
    assert run("sparse-loop", "N1", ["i1", "i3"]).lower == U("sparse-loop")
    assert run("sparse-loop", "N1", ["i2", "i3", "i4"]).lower == U("sparse-loop")
    assert run("sparse-loop", "N1", ["i1", "i2", "i3"]).lower == U("sparse-loop")
    assert run("sparse-loop", "N1", ["i2", "i3"]).lower == S(inst, "i1", "i2", "i4")


def test_reflexive_cycle_n1_upper_not_idempotent():
    inst = load("reflexive-cycle")
    up = run("reflexive-cycle", "N1", ["i1", "i3"]).upper
    assert up == S(inst, "i1", "i4")
    assert approx(inst.relation, inst.primal, "N1", "a", up).upper == S(inst, "i1", "i3", "i4")
    assert run("reflexive-cycle", "N1", ["i1", "i3"]).lower == S(inst, "i1", "i2")


def test_swap_pair_n2():
    inst = load("swap-pair")
    assert run("swap-pair", "N2", ["i1", "i2"]).upper == S(inst, "i1", "i2", "i3")
    assert run("swap-pair", "N2", ["i1", "i3", "i4"]).upper == U("swap-pair")
    assert run("swap-pair", "N2", ["i1", "i4"]).upper == S(inst, "i1", "i4")
    assert run("swap-pair", "N2", ["i1", "i2"]).lower == S(inst, "i1", "i3", "i4")


def test_fan_out_n3_and_n4():
    inst = load("fan-out")
    assert run("fan-out", "N3", ["i1", "i2"]).lower == S(inst, "i2")
    assert run("fan-out", "N3", ["i3"]).lower == S(inst, "i2")
    assert run("fan-out", "N3", ["i1", "i2", "i3"]).lower == S(inst, "i1", "i2", "i3")
    assert run("fan-out", "N3", ["i1", "i2", "i3", "i4"]).lower == S(inst, "i1", "i2", "i3")
    assert run("fan-out", "N4", ["i1", "i2", "i3"]).upper == S(inst, "i1", "i2", "i3")
    assert run("fan-out", "N4", ["i4"]).upper == S(inst)


def test_three_point_n3():
    inst = load("three-point")
    assert run("three-point", "N3", ["i3"]).upper == S(inst, "i3")
    assert run("three-point", "N3", ["i1", "i2"]).upper == S(inst, "i3")


def test_reflexive_cycle_comparisons():
    inst = load("reflexive-cycle")
    v = ["i1", "i4"]
    assert run("reflexive-cycle", "N4", v).upper == U("reflexive-cycle")
    assert run("reflexive-cycle", "N4", v).lower == S(inst, "i4")
    assert run("reflexive-cycle", "N4", v).accuracy == Fraction(1, 4)
    assert run("reflexive-cycle", "N1", v).upper == S(inst, "i1", "i3", "i4")
    assert run("reflexive-cycle", "N1", v).lower == S(inst, "i3", "i4")
    assert run("reflexive-cycle", "Yao", v).lower == S(inst, "i4")
    assert run("reflexive-cycle", "N3", ["i1", "i3"]).lower == S(inst, "i1", "i2", "i3")
    assert run("reflexive-cycle", "N4", ["i2", "i3"]).upper == S(inst, "i1", "i2", "i3")


def test_swap_pair_boundaries():
    inst = load("swap-pair")
    assert not run("swap-pair", "N1", ["i1", "i3"]).boundary
    assert run("swap-pair", "N2", ["i1", "i3"]).boundary == S(inst, "i3")


def test_patients_yao_and_n3():
    k = run("patients", "Yao", ["1", "2", "6"])
    inst = load("patients")
    assert (k.lower, k.upper, k.accuracy) == (S(inst, "1", "2", "6"), S(inst, "1", "2", "3", "5", "6"), Fraction(3, 5))
    k3 = run("patients", "N3", ["1", "2", "6"])
    assert (k3.lower, k3.upper, k3.accuracy) == (S(inst, "1", "2", "3", "5", "6"), S(inst, "1", "2"), 1)


def test_empty_target_accuracy_convention():
    inst = load("partial-chain")
    for m in ("N1", "N2", "N3", "N4"):
        assert approx(inst.relation, inst.primal, m, "a", inst.universe.empty()).accuracy == 1
    # Yao with an empty upper approximation has no accuracy
    assert approx(inst.relation, None, "Yao", "a", inst.universe.empty()).accuracy is UNDEFINED


def test_empty_set_primal_reduces_n1_to_yao():
    for name in ("partial-chain", "reflexive-cycle"):
        inst = load(name)
        p0 = empty_set_only(inst.universe)
        for kind in ALL_KINDS:
            yao = approximation_table(inst.relation, None, ModelId.YAO, kind)
            n1 = approximation_table(inst.relation, p0, ModelId.N1, kind)
            assert [(r.lower, r.upper) for r in yao] == [(r.lower, r.upper) for r in n1]


def test_query_validation():
    inst = load("partial-chain")
    with pytest.raises(StructuralError):
        ApproxQuery(ModelId.YAO, Kind.A, inst.universe.empty(), inst.relation, inst.primal)
    with pytest.raises(StructuralError):
        ApproxQuery(ModelId.N1, Kind.A, inst.universe.empty(), inst.relation, None)
    with pytest.raises(StructuralError):
        approx(inst.relation, inst.primal, "N1", "a", Universe.of_size(3).empty())
    with pytest.raises(StructuralError):
        approx(inst.relation, inst.primal, "N9", "a", inst.universe.empty())


def test_table_cap():
    u = Universe.of_size(21)
    with pytest.raises(CapacityError):
        approximation_table(Relation.empty(u), explicit(u, [[]]), ModelId.N1, Kind.A)


def test_large_universe_single_query():
    u = Universe.of_size(64)
    r = Relation.identity(u)
    res = approx(r, explicit(u, [[]]), "N1", "a", u.subset(["i1"]))
    assert res.lower == u.subset(["i1"]) and res.upper == u.subset(["i1"])
