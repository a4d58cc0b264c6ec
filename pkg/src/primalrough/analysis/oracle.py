"""Second-opinion implementation of every approximation operator.

Written against plain Python ``frozenset`` values straight from the
set-builder definitions, with neighborhoods recomputed from the pair list on
every call. It deliberately shares nothing with :mod:`primalrough.models`
beyond the input and output types, so agreement between the two is
evidence and not tautology.
"""

from __future__ import annotations

from fractions import Fraction

from ..foundation import UNDEFINED, CapacityError, Subset, Universe
from ..models import ApproxQuery, ApproxResult, ModelId
from ..relations import Kind

ORACLE_CAP = 16


def _labels(universe: Universe, subset: Subset) -> frozenset[str]:
    return frozenset(universe.labels[i] for i in range(universe.size) if subset.bits >> i & 1)


def _to_subset(universe: Universe, elems: frozenset[str]) -> Subset:
    return universe.subset(sorted(elems, key=universe.labels.index))


def _neighborhood(pairs: frozenset[tuple[str, str]], kind: Kind, x: str) -> frozenset[str]:
    after = frozenset(y for (a, y) in pairs if a == x)
    before = frozenset(y for (y, b) in pairs if b == x)
    if kind is Kind.A:
        return after
    if kind is Kind.B:
        return before
    if kind is Kind.U:
        return after | before
    return after & before


def _quotient(top: frozenset, bottom: frozenset):
    if not bottom:
        return UNDEFINED
    return Fraction(len(top), len(bottom))


def _primal_quotient(v: frozenset, top: frozenset, bottom: frozenset):
    # convention: the empty target has accuracy 1
    if not v:
        return Fraction(1)
    return _quotient(top, bottom)


class _Space:
    def __init__(self, q: ApproxQuery):
        u = q.relation.universe
        self.universe = u
        self.xi = frozenset(u.labels)
        self.pairs = frozenset(q.relation.labelled_pairs())
        self.kind = Kind(q.kind)
        self.family = None
        if q.primal is not None:
            self.family = frozenset(_labels(u, member) for member in q.primal)

    def w(self, x: str) -> frozenset[str]:
        return _neighborhood(self.pairs, self.kind, x)

    def inside(self, s: frozenset[str]) -> bool:
        return s in self.family

    # one function per definition, each a direct transcription

    def yao(self, v):
        lower = frozenset(x for x in self.xi if self.w(x) <= v)
        upper = frozenset(x for x in self.xi if self.w(x) & v)
        return lower, upper, _quotient(lower, upper)

    def n1(self, v):
        vc = self.xi - v
        lower = frozenset(x for x in self.xi if self.inside(self.w(x) & vc))
        upper = frozenset(x for x in self.xi if not self.inside(self.w(x) & v))
        return lower, upper, _primal_quotient(v, lower & v, upper | v)

    def n2(self, v):
        vc = self.xi - v
        lower = frozenset(x for x in self.xi if self.inside(self.w(x) & vc))
        upper = v | frozenset(x for x in self.xi if not self.inside(self.w(x) & v))
        return lower, upper, _primal_quotient(v, lower & v, upper)

    def _n3_lower(self, v):
        vc = self.xi - v
        out = frozenset()
        for x in self.xi:
            if self.inside(self.w(x) & vc):
                out = out | self.w(x)
        return out

    def n3(self, v):
        lower = self._n3_lower(v)
        upper = self.xi - self._n3_lower(self.xi - v)
        return lower, upper, _primal_quotient(v, lower & v, upper | v)

    def _n4_upper(self, v):
        out = frozenset()
        for x in self.xi:
            if not self.inside(self.w(x) & v):
                out = out | self.w(x)
        return out

    def n4(self, v):
        upper = self._n4_upper(v)
        lower = self.xi - self._n4_upper(self.xi - v)
        return lower, upper, _primal_quotient(v, lower & v, upper | v)


def oracle_approx(q: ApproxQuery) -> ApproxResult:
    """Evaluate ``q`` from the definitions; refuses universes above :data:`ORACLE_CAP`."""
    u = q.relation.universe
    if u.size > ORACLE_CAP:
        raise CapacityError(f"oracle capped at {ORACLE_CAP} elements, got {u.size}")
    space = _Space(q)
    v = _labels(u, q.target)
    method = {
        ModelId.YAO: space.yao,
        ModelId.N1: space.n1,
        ModelId.N2: space.n2,
        ModelId.N3: space.n3,
        ModelId.N4: space.n4,
    }[ModelId(q.model)]
    lower, upper, accuracy = method(v)
    return ApproxResult(
        _to_subset(u, lower),
        _to_subset(u, upper),
        _to_subset(u, upper - lower),
        accuracy,
    )
