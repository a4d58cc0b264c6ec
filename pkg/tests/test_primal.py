import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from primalrough.foundation import CapacityError, StructuralError, Universe
from primalrough.primal import (
    Level,
    PrimalRejected,
    SetFamily,
    downward_closure,
    empty_set_only,
    explicit,
    fixed_point_free,
    from_antichain,
    make_primal,
    maximal_members,
    membership,
    power_minus_universe,
    union_primal,
    validate_family,
    validate_ideal,
)

from conftest import S, load

# the weak fixture with four elements that is not an ideal
NOT_IDEAL = [[], ["i1"], ["i2"], ["i4"], ["i1", "i4"], ["i2", "i4"]]


def brute(family: frozenset[int], n: int) -> dict[str, bool]:
    """The three primal axioms, checked literally over all subsets."""
    full = (1 << n) - 1
    subsets = range(full + 1)
    a = full not in family
    b = all(x in family or y in family for x in subsets for y in subsets if x & y in family)
    c = all(y in family for x in family for y in subsets if y & ~x == 0)
    return {"a": a, "b": b, "c": c}


def test_not_ideal_family_is_weak_but_not_strict():
    u = Universe.of_size(4)
    fam = SetFamily(u, NOT_IDEAL)
    weak = validate_family(fam, Level.WEAK)
    assert weak.valid and "b" not in weak.holds
    strict = validate_family(fam, Level.STRICT)
    assert not strict.valid and strict.holds_a and strict.holds_c
    x, y, meet = strict.witnesses["b"]
    assert x not in fam and y not in fam and meet in fam and (x & y) == meet


def test_not_ideal_family_fails_union_closure():
    u = Universe.of_size(4)
    report = validate_ideal(SetFamily(u, NOT_IDEAL))
    assert not report.holds_a and report.holds["b"]
    x, y, join = report.witnesses["a"]
    assert x in SetFamily(u, NOT_IDEAL) and join not in SetFamily(u, NOT_IDEAL)


def test_full_power_set_is_ideal_not_primal():
    u = Universe.of_size(4)
    fam = SetFamily(u, range(16))
    assert validate_ideal(fam).valid
    report = validate_family(fam, Level.WEAK)
    assert not report.holds_a and report.witnesses["a"] == (u.full(),)


@pytest.mark.parametrize("n", range(1, 6))
def test_power_minus_universe_and_fixed_point_free_are_strict(n):
    u = Universe.of_size(n)
    p = power_minus_universe(u)
    assert p.level is Level.STRICT and brute(p.masks, n) == {"a": True, "b": True, "c": True}
    for x in range(n):
        q = fixed_point_free(u, x)
        assert brute(q.masks, n) == {"a": True, "b": True, "c": True}


@pytest.mark.parametrize("n", range(1, 5))
def test_empty_set_only_is_strict_only_on_a_singleton(n):
    p = empty_set_only(Universe.of_size(n))
    assert p.is_strict() is (n == 1)
    assert brute(p.masks, n)["b"] is (n == 1)


def test_weak_example_primals():
    # fixtures whose families are proper and downward closed but do not split intersections
    for name in ("partial-chain", "sparse-loop", "reflexive-cycle", "patients"):
        inst = load(name)
        assert not inst.primal.is_strict(), name
    assert load("three-point").primal.is_strict()


def test_sparse_loop_primal_rejected_at_strict():
    inst = load("sparse-loop")
    with pytest.raises(PrimalRejected) as err:
        explicit(inst.universe, [[], ["i1"], ["i4"]], Level.STRICT)
    a, b, meet = err.value.report.witnesses["b"]
    assert meet in inst.primal and a not in inst.primal and b not in inst.primal


def test_membership():
    chain = load("partial-chain")
    assert membership(chain.primal, S(chain, "i2", "i3"))
    assert not membership(chain.primal, chain.universe.full())
    cyc = load("reflexive-cycle")
    assert not membership(cyc.primal, S(cyc, "i2", "i3"))


def test_antichain_constructor():
    chain = load("partial-chain")
    built = make_primal("antichain", chain.universe, [["i1", "i3"], ["i2", "i3"]])
    assert built.family == chain.primal.family
    assert sorted(s.bits for s in maximal_members(built.family)) == [S(chain, "i1", "i3").bits, S(chain, "i2", "i3").bits]


def test_union_primal():
    fan = load("fan-out")
    joined = union_primal(fan.primal, fan.aux["P1"])
    assert joined.family == SetFamily(fan.universe, [[], ["i2"], ["i4"]])
    u = Universe.of_size(3)
    a, b = explicit(u, [[], ["i1"]]), explicit(u, [[], ["i2"]])
    assert union_primal(a, b).family == SetFamily(u, [[], ["i1"], ["i2"]])
    assert union_primal(fan.primal, empty_set_only(fan.universe)).family == fan.primal.family
    with pytest.raises(StructuralError):
        union_primal(a, explicit(Universe.of_size(2), [[]]))


def test_union_of_strict_primals_is_strict():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        u = Universe.of_size(n)
        p, q = fixed_point_free(u, rng.randrange(n)), fixed_point_free(u, rng.randrange(n))
        assert union_primal(p, q).level is Level.STRICT


def test_degenerate_empty_family():
    u = Universe.of_size(3)
    p = explicit(u, [])
    assert p.degenerate and u.empty() not in p


def test_rejections_carry_witnesses():
    u = Universe.of_size(3)
    with pytest.raises(PrimalRejected) as err:
        explicit(u, [["i1", "i2"]])
    big, small = err.value.report.witnesses["c"]
    assert small <= big and small not in SetFamily(u, [["i1", "i2"]])
    with pytest.raises(PrimalRejected):
        explicit(u, [[], ["i1"], ["i2"], ["i3"], ["i1", "i2"], ["i1", "i3"], ["i2", "i3"], ["i1", "i2", "i3"]])


def test_strict_check_capped():
    u = Universe.of_size(17)
    with pytest.raises(CapacityError):
        validate_family(SetFamily(u, [0]), Level.STRICT)


@st.composite
def families(draw):
    n = draw(st.integers(1, 4))
    members = draw(st.sets(st.integers(0, (1 << n) - 1)))
    return n, frozenset(members)


@settings(max_examples=400)
@given(families())
def test_validator_matches_brute_force(case):
    n, members = case
    u = Universe.of_size(n)
    report = validate_family(SetFamily(u, members), Level.STRICT)
    assert dict(report.holds) == brute(members, n)


def test_validator_matches_brute_force_on_every_family_of_three():
    u = Universe.of_size(3)
    for bits in range(1 << 8):
        members = frozenset(m for m in range(8) if bits >> m & 1)
        assert dict(validate_family(SetFamily(u, members), Level.STRICT).holds) == brute(members, 3)


@given(st.integers(1, 5), st.lists(st.integers(0, 30), max_size=4))
def test_closure_is_downward_closed(n, gens):
    u = Universe.of_size(n)
    gens = [g & u.mask for g in gens]
    fam = downward_closure(u, gens)
    assert brute(fam.masks, n)["c"]
    if fam.masks:
        assert 0 in fam.masks
