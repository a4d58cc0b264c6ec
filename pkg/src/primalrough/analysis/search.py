"""Bounded, deterministic counterexample search over small approximation spaces.

Instances are visited in a fixed order: universe size ascending; within a
size, relations by their pair bitmask (bit ``i*n + j`` is the pair
``(i, j)``, so the order is lexicographic over pair sets); within a relation,
primals ordered by their maximal antichain (fewer generators first, then
generator masks). Two-primal targets also enumerate a second primal ``Q``.
The first failing point wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from ..foundation import ENUMERATION_CAP, CapacityError, StructuralError, Universe
from ..instances import Instance, fixture, random_instances
from ..primal import Level, Primal, SetFamily, maximal_members, validate_family
from ..relations import ALL_KINDS, Kind, Relation
from .laws import Domain, Env, LawReport, Point, Verdict, evaluate
from .nonproperties import TARGETS, Target

_TWO_PRIMAL = (Domain.PRIMAL_CHAIN, Domain.PRIMAL_PAIR, Domain.PRIMAL_UNION)


@dataclass(frozen=True)
class SearchBounds:
    max_size: int = 4
    max_instances: int = 250_000
    seed: int | None = None
    random_draws: int = 0
    level: Level = Level.WEAK
    kinds: tuple[Kind, ...] = ALL_KINDS

    def __post_init__(self):
        if not 1 <= self.max_size <= 5:
            raise CapacityError(f"search size bound must be within 1..5, got {self.max_size}")


@dataclass(frozen=True)
class CounterexampleReport:
    target: str
    statement: str
    bounds: SearchBounds
    examined: int
    instance: Instance | None = None
    witness: Point | None = None
    witness_text: str = ""
    phase: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None

    def confirm(self) -> bool:
        """Re-evaluate the witness from scratch; True when it really violates the target."""
        if not self.found:
            return False
        law = TARGETS[self.target].law
        env = Env(self.instance.relation, self.instance.primal, self.instance.aux)
        return not law.predicate(env, self.witness)

    def as_dict(self) -> dict:
        out = {
            "target": self.target,
            "statement": self.statement,
            "bounds": {
                "max_size": self.bounds.max_size,
                "max_instances": self.bounds.max_instances,
                "seed": self.bounds.seed,
                "random_draws": self.bounds.random_draws,
                "level": str(self.bounds.level),
            },
            "examined": self.examined,
            "found": self.found,
        }
        if self.found:
            inst = self.instance
            u = inst.universe
            out["instance"] = {
                "name": inst.name,
                "universe": list(u.labels),
                "relation": [list(p) for p in inst.relation.labelled_pairs()],
                "primal": [u.labels_of(s) for s in maximal_members(inst.primal.family)],
                "aux": {k: [u.labels_of(s) for s in maximal_members(v.family)] for k, v in inst.aux.items()},
            }
            out["witness"] = self.witness.as_dict(Env(inst.relation, inst.primal, inst.aux))
            out["witness_text"] = self.witness_text
            out["phase"] = self.phase
        return out


def target(target_id: str) -> Target:
    try:
        return TARGETS[target_id]
    except KeyError:
        raise StructuralError(f"unknown search target {target_id!r}") from None


@lru_cache(maxsize=None)
def downsets(n: int) -> tuple[frozenset[int], ...]:
    """Every downward-closed family on ``n`` elements that contains the empty set but not the universe."""
    full = (1 << n) - 1
    masks = sorted(range(1, full), key=lambda m: (m.bit_count(), m))
    out: list[frozenset[int]] = []

    def grow(i: int, current: set[int]) -> None:
        if i == len(masks):
            out.append(frozenset(current))
            return
        m = masks[i]
        grow(i + 1, current)
        bits = m
        while bits:
            low = bits & -bits
            if m ^ low not in current:
                return
            bits ^= low
        current.add(m)
        grow(i + 1, current)
        current.discard(m)

    grow(0, {0})

    def key(family):
        gens = sorted(o for o in family if not any(x != o and x & o == o for x in family))
        return (len(gens), gens)

    return tuple(sorted(out, key=key))


def primals_of(universe: Universe, level: Level = Level.WEAK) -> list[Primal]:
    out = []
    for family in downsets(universe.size):
        fam = SetFamily(universe, family)
        report = validate_family(fam, level)
        if report.valid:
            out.append(Primal(fam, level, report))
    return out


def relations_of(universe: Universe) -> Iterator[Relation]:
    n = universe.size
    row_mask = universe.mask
    for code in range(1 << (n * n)):
        yield Relation.from_rows(universe, [(code >> (i * n)) & row_mask for i in range(n)])


def _instances(t: Target, bounds: SearchBounds) -> Iterator[Instance]:
    two = t.law.domain in _TWO_PRIMAL
    for n in range(1, bounds.max_size + 1):
        universe = Universe.of_size(n)
        primals = primals_of(universe, bounds.level)
        for r_index, relation in enumerate(relations_of(universe)):
            for p_index, p in enumerate(primals):
                if two:
                    for q_index, q in enumerate(primals):
                        if q_index != p_index:
                            yield Instance(f"enum(size={n}, relation={r_index}, primal={p_index}, Q={q_index})", relation, p, {"Q": q})
                else:
                    yield Instance(f"enum(size={n}, relation={r_index}, primal={p_index})", relation, p)


def _check(t: Target, inst: Instance, kinds: Sequence[Kind]) -> LawReport:
    env = Env(inst.relation, inst.primal, inst.aux)
    return evaluate(t.law, env, kinds, inst.name)


def search_counterexample(target_id: str, bounds: SearchBounds = SearchBounds()) -> CounterexampleReport:
    t = target(target_id)
    law = t.law
    examined = 0
    for inst in _instances(t, bounds):
        if examined >= bounds.max_instances:
            break
        examined += 1
        rep = _check(t, inst, bounds.kinds)
        if rep.verdict is Verdict.FAILS:
            return CounterexampleReport(t.id, law.statement, bounds, examined, inst, rep.witness, rep.witness_text, "enumeration")
    if bounds.seed is not None and bounds.random_draws:
        for inst in random_instances(bounds.random_draws, bounds.max_size, bounds.seed):
            examined += 1
            rep = _check(t, inst, bounds.kinds)
            if rep.verdict is Verdict.FAILS:
                return CounterexampleReport(t.id, law.statement, bounds, examined, inst, rep.witness, rep.witness_text, "random")
    return CounterexampleReport(t.id, law.statement, bounds, examined)


def companion_report(target_id: str) -> LawReport:
    """Evaluate the target on its illustrating fixture (with the fixture's extra primals)."""
    t = target(target_id)
    inst = fixture(t.companion)
    if inst.universe.size > ENUMERATION_CAP:
        raise CapacityError("companion fixture too large")
    return _check(t, inst, ALL_KINDS)
