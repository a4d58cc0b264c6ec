"""Finite universes, bit-indexed subsets and exact accuracy quotients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

MAX_UNIVERSE = 64
ENUMERATION_CAP = 20


class RoughSetError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(RoughSetError, ValueError):
    """Inputs that do not fit together (widths, universes, labels)."""


class CapacityError(RoughSetError):
    """An enumeration or check would exceed its configured size cap."""


class _Undefined:
    """Accuracy of a quotient with an empty denominator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNDEFINED"

    def __str__(self) -> str:
        return "undefined"

    def __reduce__(self):
        return (_Undefined, ())


UNDEFINED = _Undefined()

Accuracy = Union[Fraction, _Undefined]


def format_accuracy(value: Accuracy) -> str:
    """Render an accuracy as ``"3/5"``, ``"1"``, ``"0"`` or ``"undefined"``."""
    return str(value)


def parse_accuracy(text: str) -> Accuracy:
    text = text.strip()
    if text.lower() == "undefined":
        return UNDEFINED
    return Fraction(text)


@dataclass(frozen=True, slots=True)
class Subset:
    """A subset of a universe of ``size`` elements, stored as an int bitmask.

    Bit ``i`` set means element ``i`` belongs to the subset. Binary set
    operations require both operands to have the same width.
    """

    bits: int
    size: int

    def __post_init__(self) -> None:
        if not 1 <= self.size <= MAX_UNIVERSE:
            raise StructuralError(f"subset width {self.size} outside 1..{MAX_UNIVERSE}")
        if self.bits < 0 or self.bits >> self.size:
            raise StructuralError(f"bits {self.bits:#x} exceed width {self.size}")

    def _check(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.size != self.size:
            raise StructuralError(f"width mismatch: {self.size} vs {other.size}")

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.bits & other.bits, self.size)

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.bits | other.bits, self.size)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.bits & ~other.bits, self.size)

    def __xor__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.bits ^ other.bits, self.size)

    def __invert__(self) -> Subset:
        return Subset(~self.bits & ((1 << self.size) - 1), self.size)

    def __le__(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index < self.size and bool(self.bits >> index & 1)

    def issubset(self, other: Subset) -> bool:
        return self <= other

    def isdisjoint(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & other.bits == 0


@dataclass(frozen=True)
class Universe:
    """An ordered, nonempty collection of distinctly labelled elements."""

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[object]):
        labels = tuple(str(label) for label in labels)
        if not 1 <= len(labels) <= MAX_UNIVERSE:
            raise StructuralError(f"universe size {len(labels)} outside 1..{MAX_UNIVERSE}")
        if len(set(labels)) != len(labels):
            dupes = sorted({x for x in labels if labels.count(x) > 1})
            raise StructuralError(f"duplicate labels: {dupes}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int, prefix: str = "i") -> Universe:
        """Universe labelled ``i1 .. in``."""
        return cls(f"{prefix}{k}" for k in range(1, n + 1))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def mask(self) -> int:
        return (1 << self.size) - 1

    def __len__(self) -> int:
        return self.size

    def index(self, element: int | str) -> int:
        if isinstance(element, int) and not isinstance(element, bool):
            if 0 <= element < self.size:
                return element
            raise StructuralError(f"element index {element} outside 0..{self.size - 1}")
        try:
            return self._index[str(element)]
        except KeyError:
            raise StructuralError(f"unknown element label {element!r}") from None

    def empty(self) -> Subset:
        return Subset(0, self.size)

    def full(self) -> Subset:
        return Subset(self.mask, self.size)

    def subset(self, elements: Iterable[int | str] = ()) -> Subset:
        """Build a subset from labels or indices."""
        bits = 0
        for element in elements:
            bits |= 1 << self.index(element)
        return Subset(bits, self.size)

    def from_bits(self, bits: int) -> Subset:
        return Subset(bits, self.size)

    def parse(self, text: str) -> Subset:
        """Parse a comma-separated label list; the empty string is the empty set."""
        parts = [part.strip() for part in text.split(",")]
        return self.subset(part for part in parts if part)

    def labels_of(self, subset: Subset) -> list[str]:
        self.conforms(subset)
        return [self.labels[i] for i in subset]

    def render(self, subset: Subset) -> str:
        if subset.bits == self.mask and self.size > 1:
            return "U"
        return "{" + ", ".join(self.labels_of(subset)) + "}"

    def conforms(self, subset: Subset) -> None:
        if subset.size != self.size:
            raise StructuralError(f"subset width {subset.size} does not match universe size {self.size}")


def complement(subset: Subset, universe: Universe) -> Subset:
    universe.conforms(subset)
    return ~subset


def power_set(universe: Universe, cap: int = ENUMERATION_CAP) -> Iterator[Subset]:
    """Yield every subset of ``universe`` in ascending bit-pattern order."""
    if universe.size > cap:
        raise CapacityError(f"power set of {universe.size} elements exceeds cap {cap}")
    size = universe.size
    return (Subset(bits, size) for bits in range(1 << size))


def accuracy_ratio(numerator_set: Subset, denominator_set: Subset) -> Accuracy:
    """``|numerator_set| / |denominator_set|`` in lowest terms."""
    if not denominator_set:
        return UNDEFINED
    return Fraction(len(numerator_set), len(denominator_set))


def sort_subsets(subsets: Sequence[Subset]) -> list[Subset]:
    return sorted(subsets, key=lambda s: s.bits)
