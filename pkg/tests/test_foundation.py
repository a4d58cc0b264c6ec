from fractions import Fraction

import pytest

from primalrough.foundation import (
    UNDEFINED,
    CapacityError,
    StructuralError,
    Subset,
    Universe,
    accuracy_ratio,
    complement,
    format_accuracy,
    parse_accuracy,
    power_set,
)


def test_universe_labels_and_index():
    u = Universe(["x", "y", "z"])
    assert u.size == 3
    assert u.index("y") == 1
    assert u.subset(["x", "z"]).bits == 0b101
    assert u.labels_of(u.from_bits(0b110)) == ["y", "z"]


def test_universe_rejects_duplicates_and_bad_sizes():
    with pytest.raises(StructuralError, match="duplicate"):
        Universe(["a", "a"])
    with pytest.raises(StructuralError):
        Universe([])
    with pytest.raises(StructuralError):
        Universe(range(65))
    assert Universe(range(64)).size == 64


def test_unknown_label():
    with pytest.raises(StructuralError, match="unknown element"):
        Universe.of_size(3).subset(["i7"])


def test_subset_algebra():
    u = Universe.of_size(4)
    a, b = u.subset(["i1", "i2"]), u.subset(["i2", "i3"])
    assert (a & b) == u.subset(["i2"])
    assert (a | b) == u.subset(["i1", "i2", "i3"])
    assert (a - b) == u.subset(["i1"])
    assert ~a == u.subset(["i3", "i4"])
    assert complement(a, u) == ~a
    assert u.subset(["i2"]) <= a and not a <= b
    assert len(a | b) == 3
    assert list(b) == [1, 2]


def test_width_mismatch_is_rejected():
    with pytest.raises(StructuralError):
        Subset(1, 3) & Subset(1, 4)
    with pytest.raises(StructuralError):
        Subset(0b1000, 3)


def test_power_set_order_and_cap():
    u = Universe.of_size(3)
    assert [s.bits for s in power_set(u)] == list(range(8))
    with pytest.raises(CapacityError):
        list(power_set(Universe.of_size(21)))


def test_accuracy_ratio_exact_and_undefined():
    u = Universe.of_size(5)
    assert accuracy_ratio(u.subset([0, 1, 2]), u.subset([0, 1, 2, 3, 4])) == Fraction(3, 5)
    assert accuracy_ratio(u.empty(), u.empty()) is UNDEFINED


@pytest.mark.parametrize("text,value", [("3/5", Fraction(3, 5)), ("1", Fraction(1)), ("0", Fraction(0)), ("undefined", UNDEFINED)])
def test_accuracy_text_round_trip(text, value):
    assert parse_accuracy(text) == value
    assert format_accuracy(value) == text


def test_render():
    u = Universe.of_size(3)
    assert u.render(u.full()) == "U"
    assert u.render(u.empty()) == "{}"
    assert u.parse("i1, i3") == u.subset(["i1", "i3"])
    assert u.parse("") == u.empty()
