"""Families of subsets: primal and ideal validation, constructors and unions.

A primal on a universe ``U`` is a family that excludes ``U`` itself (axiom
a), is downward closed (axiom c) and splits intersections: if ``A & B`` is a
member then ``A`` or ``B`` is (axiom b). Families that satisfy only (a) and
(c) are accepted as *weak* primals, which is all the approximation operators
need.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .foundation import CapacityError, RoughSetError, StructuralError, Subset, Universe

STRICT_CHECK_CAP = 16


class Level(str, enum.Enum):
    STRICT = "strict"
    WEAK = "weak"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Level:
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise StructuralError(f"unknown validation mode {text!r}; expected strict or weak") from None


def weaker(a: Level, b: Level) -> Level:
    return Level.WEAK if Level.WEAK in (a, b) else Level.STRICT


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of subsets of one universe."""

    universe: Universe
    masks: frozenset[int]

    def __init__(self, universe: Universe, members: Iterable[Subset | int | Iterable[int | str]] = ()):
        masks = set()
        for member in members:
            masks.add(_as_mask(universe, member))
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "masks", frozenset(masks))

    def __contains__(self, subset: Subset) -> bool:
        self.universe.conforms(subset)
        return subset.bits in self.masks

    def __iter__(self) -> Iterator[Subset]:
        size = self.universe.size
        return (Subset(m, size) for m in sorted(self.masks))

    def __len__(self) -> int:
        return len(self.masks)

    def __le__(self, other: SetFamily) -> bool:
        _same_universe(self.universe, other.universe)
        return self.masks <= other.masks

    def __or__(self, other: SetFamily) -> SetFamily:
        _same_universe(self.universe, other.universe)
        return SetFamily(self.universe, self.masks | other.masks)

    def members(self) -> list[Subset]:
        return list(self)

    def labelled(self) -> list[list[str]]:
        return [self.universe.labels_of(s) for s in self]


def _as_mask(universe: Universe, member: Subset | int | Iterable[int | str]) -> int:
    if isinstance(member, Subset):
        universe.conforms(member)
        return member.bits
    if isinstance(member, int) and not isinstance(member, bool):
        if member < 0 or member >> universe.size:
            raise StructuralError(f"mask {member:#x} exceeds universe size {universe.size}")
        return member
    if isinstance(member, str):
        # a bare string is one label, not a sequence of characters
        return universe.subset([member]).bits
    return universe.subset(member).bits


def _same_universe(a: Universe, b: Universe) -> None:
    if a != b:
        raise StructuralError("set families live on different universes")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a family against primal or ideal axioms.

    ``holds`` maps an axiom letter to its verdict; ``witnesses`` holds, for
    each failed axiom, the subsets showing the failure:

    * primal (a): ``(U,)``; (b): ``(A, B, A & B)``; (c): ``(A, B)`` with
      ``B <= A``, ``A`` a member and ``B`` not.
    * ideal (a): ``(A, B, A | B)``; (b): as primal (c).
    """

    structure: str
    mode: Level | None
    holds: Mapping[str, bool]
    witnesses: Mapping[str, tuple[Subset, ...]] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.holds.values())

    @property
    def holds_a(self) -> bool:
        return self.holds["a"]

    @property
    def holds_b(self) -> bool | None:
        return self.holds.get("b")

    @property
    def holds_c(self) -> bool | None:
        return self.holds.get("c")

    def describe(self, universe: Universe) -> str:
        parts = []
        for axiom, ok in sorted(self.holds.items()):
            text = f"({axiom}) {'holds' if ok else 'fails'}"
            if not ok:
                text += " with " + ", ".join(universe.render(s) for s in self.witnesses[axiom])
            parts.append(text)
        return f"{self.structure} [{self.mode or '-'}]: " + "; ".join(parts)


class PrimalRejected(RoughSetError):
    """A family failed validation at the requested level."""

    def __init__(self, report: ValidationReport, universe: Universe):
        self.report = report
        super().__init__(report.describe(universe))


def _downward_violation(family: SetFamily) -> tuple[Subset, Subset] | None:
    # only immediate subsets need checking: closure under one-element removal
    # over every member implies closure under arbitrary subsets
    size = family.universe.size
    masks = family.masks
    for a in sorted(masks):
        bits = a
        while bits:
            low = bits & -bits
            if a ^ low not in masks:
                return Subset(a, size), Subset(a ^ low, size)
            bits ^= low
    return None


def _minimal_nonmembers(family: SetFamily) -> list[int]:
    full = family.universe.mask
    masks = family.masks
    out = []
    for m in range(full + 1):
        if m in masks:
            continue
        bits = m
        minimal = True
        while bits:
            low = bits & -bits
            if m ^ low not in masks:
                minimal = False
                break
            bits ^= low
        if minimal:
            out.append(m)
    return out


def _split_violation(family: SetFamily) -> tuple[Subset, Subset, Subset] | None:
    """Find non-members ``A``, ``B`` whose intersection is a member."""
    size = family.universe.size
    full = family.universe.mask
    masks = family.masks
    if _downward_violation(family) is None:
        # downward closed: the non-members form an upset, which is closed
        # under intersection iff it has a single minimal element
        minimal = _minimal_nonmembers(family)
        if len(minimal) <= 1:
            return None
        a, b = minimal[0], minimal[1]
        return Subset(a, size), Subset(b, size), Subset(a & b, size)
    non = [m for m in range(full + 1) if m not in masks]
    for x, a in enumerate(non):
        for b in non[x:]:
            if a & b in masks:
                return Subset(a, size), Subset(b, size), Subset(a & b, size)
    return None


def validate_family(family: SetFamily, mode: Level = Level.STRICT) -> ValidationReport:
    """Check the primal axioms; ``WEAK`` skips the intersection-splitting axiom."""
    mode = Level(mode)
    universe = family.universe
    holds: dict[str, bool] = {}
    witnesses: dict[str, tuple[Subset, ...]] = {}

    holds["a"] = universe.mask not in family.masks
    if not holds["a"]:
        witnesses["a"] = (universe.full(),)

    down = _downward_violation(family)
    holds["c"] = down is None
    if down is not None:
        witnesses["c"] = down

    if mode is Level.STRICT:
        if universe.size > STRICT_CHECK_CAP:
            raise CapacityError(f"strict primal check capped at {STRICT_CHECK_CAP} elements, got {universe.size}")
        split = _split_violation(family)
        holds["b"] = split is None
        if split is not None:
            witnesses["b"] = split

    return ValidationReport("primal", mode, holds, witnesses)


def validate_ideal(family: SetFamily) -> ValidationReport:
    """Check closure under pairwise unions (a) and under subsets (b)."""
    size = family.universe.size
    holds: dict[str, bool] = {}
    witnesses: dict[str, tuple[Subset, ...]] = {}
    masks = sorted(family.masks)
    present = family.masks
    union = next(((a, b) for i, a in enumerate(masks) for b in masks[i + 1 :] if a | b not in present), None)
    holds["a"] = union is None
    if union is not None:
        a, b = union
        witnesses["a"] = (Subset(a, size), Subset(b, size), Subset(a | b, size))
    down = _downward_violation(family)
    holds["b"] = down is None
    if down is not None:
        witnesses["b"] = down
    return ValidationReport("ideal", None, holds, witnesses)


@dataclass(frozen=True)
class Primal:
    """A validated primal (or weak primal).

    Build one through :func:`explicit`, :func:`from_antichain`,
    :func:`power_minus_universe`, :func:`fixed_point_free` or
    :func:`make_primal`; they validate before returning.
    """

    family: SetFamily
    level: Level
    report: ValidationReport = field(compare=False, repr=False)

    @classmethod
    def validated(cls, family: SetFamily, mode: Level = Level.WEAK) -> Primal:
        mode = Level(mode)
        report = validate_family(family, mode)
        if not report.valid:
            raise PrimalRejected(report, family.universe)
        return cls(family, mode, report)

    @property
    def universe(self) -> Universe:
        return self.family.universe

    @property
    def masks(self) -> frozenset[int]:
        return self.family.masks

    @property
    def degenerate(self) -> bool:
        """The empty family: accepted, but the empty set is then not a member."""
        return not self.family.masks

    def __contains__(self, subset: Subset) -> bool:
        return subset in self.family

    def __len__(self) -> int:
        return len(self.family)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.family)

    def is_strict(self) -> bool:
        if self.level is Level.STRICT:
            return True
        return validate_family(self.family, Level.STRICT).valid


def membership(primal: Primal, subset: Subset) -> bool:
    return subset in primal


def downward_closure(universe: Universe, generators: Iterable[Subset | int | Iterable[int | str]]) -> SetFamily:
    masks: set[int] = set()
    for gen in generators:
        top = _as_mask(universe, gen)
        if top in masks:
            continue
        sub = top
        while True:
            masks.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & top
    return SetFamily(universe, masks)


def maximal_members(family: SetFamily) -> list[Subset]:
    """The maximal antichain generating a downward-closed family."""
    masks = family.masks
    size = family.universe.size
    out = []
    for m in sorted(masks):
        if not any(o != m and o & m == m for o in masks):
            out.append(Subset(m, size))
    return out


def explicit(universe: Universe, members: Iterable, mode: Level = Level.WEAK) -> Primal:
    return Primal.validated(SetFamily(universe, members), mode)


def from_antichain(universe: Universe, maximal: Iterable, mode: Level = Level.WEAK) -> Primal:
    return Primal.validated(downward_closure(universe, maximal), mode)


def power_minus_universe(universe: Universe) -> Primal:
    return Primal.validated(SetFamily(universe, range(universe.mask)), Level.STRICT)


def fixed_point_free(universe: Universe, element: int | str, mode: Level = Level.STRICT) -> Primal:
    """All subsets that do not contain ``element``."""
    bit = 1 << universe.index(element)
    return Primal.validated(SetFamily(universe, (m for m in range(universe.mask + 1) if not m & bit)), mode)


def empty_set_only(universe: Universe) -> Primal:
    return Primal.validated(SetFamily(universe, [0]), Level.WEAK)


def make_primal(kind: str, universe: Universe, payload=None, mode: Level = Level.WEAK) -> Primal:
    """Dispatch on constructor name: ``explicit``, ``antichain``, ``power-minus-universe``, ``fixed-point-free``."""
    kind = kind.replace("_", "-").lower()
    if kind == "explicit":
        return explicit(universe, payload or (), mode)
    if kind in ("antichain", "maximal-antichain"):
        return from_antichain(universe, payload or (), mode)
    if kind == "power-minus-universe":
        return Primal.validated(SetFamily(universe, range(universe.mask)), mode)
    if kind == "fixed-point-free":
        return fixed_point_free(universe, payload, mode)
    raise StructuralError(f"unknown primal constructor {kind!r}")


def union_primal(p: Primal, q: Primal) -> Primal:
    """Member-wise union, validated at the weaker of the two levels."""
    _same_universe(p.universe, q.universe)
    return Primal.validated(p.family | q.family, weaker(p.level, q.level))
