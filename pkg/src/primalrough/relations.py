"""Binary relations on a universe and the after/before/union/intersection neighborhoods they induce."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .foundation import StructuralError, Subset, Universe


class Kind(str, enum.Enum):
    """Which neighborhood of an element to use.

    ``A`` is the after neighborhood (successors), ``B`` the before
    neighborhood (predecessors), ``U`` their union and ``I`` their
    intersection.
    """

    A = "a"
    B = "b"
    I = "i"  # noqa: E741
    U = "u"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Kind:
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise StructuralError(f"unknown neighborhood kind {text!r}; expected one of a, b, i, u") from None


ALL_KINDS = (Kind.A, Kind.B, Kind.I, Kind.U)


@dataclass(frozen=True)
class Relation:
    """A binary relation with forward (successor) and backward (predecessor) rows."""

    universe: Universe
    forward: tuple[Subset, ...]
    backward: tuple[Subset, ...]

    def __post_init__(self) -> None:
        n = self.universe.size
        if len(self.forward) != n or len(self.backward) != n:
            raise StructuralError("relation rows do not match universe size")
        for i in range(n):
            for j in range(n):
                if (j in self.forward[i]) != (i in self.backward[j]):
                    raise StructuralError(f"forward and backward indexes disagree on ({i}, {j})")

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[int | str, int | str]]) -> Relation:
        """Build a relation from ``(x, y)`` pairs of labels or indices; duplicates are harmless."""
        n = universe.size
        fwd = [0] * n
        bwd = [0] * n
        for pair in pairs:
            try:
                x, y = pair
            except (TypeError, ValueError):
                raise StructuralError(f"relation pair {pair!r} is not a 2-element pair") from None
            i, j = universe.index(x), universe.index(y)
            fwd[i] |= 1 << j
            bwd[j] |= 1 << i
        return cls(
            universe,
            tuple(Subset(b, n) for b in fwd),
            tuple(Subset(b, n) for b in bwd),
        )

    @classmethod
    def from_rows(cls, universe: Universe, rows: Iterable[int]) -> Relation:
        """Build from successor bitmasks, one row per element."""
        rows = list(rows)
        n = universe.size
        if len(rows) != n:
            raise StructuralError(f"expected {n} rows, got {len(rows)}")
        bwd = [0] * n
        for i, row in enumerate(rows):
            for j in range(n):
                if row >> j & 1:
                    bwd[j] |= 1 << i
        return cls(universe, tuple(Subset(r, n) for r in rows), tuple(Subset(b, n) for b in bwd))

    @classmethod
    def identity(cls, universe: Universe) -> Relation:
        return cls.from_pairs(universe, ((i, i) for i in range(universe.size)))

    @classmethod
    def empty(cls, universe: Universe) -> Relation:
        return cls.from_pairs(universe, ())

    def __contains__(self, pair: tuple[int | str, int | str]) -> bool:
        x, y = pair
        return self.universe.index(y) in self.forward[self.universe.index(x)]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.forward) for j in row]

    def labelled_pairs(self) -> list[tuple[str, str]]:
        labels = self.universe.labels
        return [(labels[i], labels[j]) for i, j in self.pairs()]


@dataclass(frozen=True)
class NeighborhoodMap:
    """The ``kind`` neighborhood of every element, indexed by element."""

    kind: Kind
    rows: tuple[Subset, ...]

    def __getitem__(self, index: int) -> Subset:
        return self.rows[index]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(row.bits for row in self.rows)


def neighborhood(relation: Relation, kind: Kind, element: int | str) -> Subset:
    i = relation.universe.index(element)
    kind = Kind(kind)
    after, before = relation.forward[i], relation.backward[i]
    if kind is Kind.A:
        return after
    if kind is Kind.B:
        return before
    if kind is Kind.U:
        return after | before
    return after & before


@lru_cache(maxsize=4096)
def neighborhood_map(relation: Relation, kind: Kind) -> NeighborhoodMap:
    kind = Kind(kind)
    rows = tuple(neighborhood(relation, kind, i) for i in range(relation.universe.size))
    return NeighborhoodMap(kind, rows)


def is_reflexive(relation: Relation) -> bool:
    return all(i in row for i, row in enumerate(relation.forward))


def is_serial(relation: Relation, kind: Kind) -> bool:
    """True when no element has an empty ``kind`` neighborhood."""
    return all(neighborhood_map(relation, kind).rows)
