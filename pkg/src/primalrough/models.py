"""Lower/upper approximations, boundaries and accuracies.

Five operator families are provided. ``YAO`` is the classical neighborhood
model: an element is in the lower approximation when its neighborhood lies
inside the target, and in the upper one when the two meet. ``N1`` .. ``N4``
replace those tests with membership in a primal ``P``:

* ``N1``: lower = {x : w(x) & ~V in P}; upper = {x : w(x) & V not in P}.
* ``N2``: lower as ``N1``; upper = V | upper_N1(V).
* ``N3``: lower = union of w(x) over x with w(x) & ~V in P;
  upper(V) = ~lower(~V).
* ``N4``: upper = union of w(x) over x with w(x) & V not in P;
  lower(V) = ~upper(~V).

All results are exact: accuracies are :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .foundation import ENUMERATION_CAP, Accuracy, CapacityError, StructuralError, Subset, accuracy_ratio
from .primal import Primal
from .relations import Kind, Relation, neighborhood_map


class ModelId(str, enum.Enum):
    YAO = "Yao"
    N1 = "N1"
    N2 = "N2"
    N3 = "N3"
    N4 = "N4"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> ModelId:
        for model in cls:
            if model.value.lower() == text.strip().lower():
                return model
        raise StructuralError(f"unknown model {text!r}; expected one of Yao, N1, N2, N3, N4")


PRIMAL_MODELS = (ModelId.N1, ModelId.N2, ModelId.N3, ModelId.N4)
ALL_MODELS = (ModelId.YAO,) + PRIMAL_MODELS


@dataclass(frozen=True)
class ApproxQuery:
    model: ModelId
    kind: Kind
    target: Subset
    relation: Relation
    primal: Primal | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "model", ModelId(self.model))
        object.__setattr__(self, "kind", Kind(self.kind))
        self.relation.universe.conforms(self.target)
        if self.model is ModelId.YAO:
            if self.primal is not None:
                raise StructuralError("the Yao model takes no primal")
        else:
            if self.primal is None:
                raise StructuralError(f"model {self.model} requires a primal")
            if self.primal.universe != self.relation.universe:
                raise StructuralError("primal and relation live on different universes")


@dataclass(frozen=True)
class ApproxResult:
    lower: Subset
    upper: Subset
    boundary: Subset
    accuracy: Accuracy

    @property
    def definable(self) -> bool:
        return not self.boundary


def _result(lower: int, upper: int, size: int, accuracy: Accuracy) -> ApproxResult:
    return ApproxResult(Subset(lower, size), Subset(upper, size), Subset(upper & ~lower, size), accuracy)


def _primal_accuracy(numerator: Subset, denominator: Subset, target: int) -> Accuracy:
    # the empty target is treated as exactly definable whatever its upper
    # approximation; otherwise the denominator contains the target and is nonzero
    if not target:
        return Fraction(1)
    return accuracy_ratio(numerator, denominator)


def _rows(q: ApproxQuery) -> tuple[int, ...]:
    return neighborhood_map(q.relation, q.kind).masks


def _n1_bits(rows: tuple[int, ...], members: frozenset[int], v: int, full: int) -> tuple[int, int]:
    vc = full & ~v
    lower = upper = 0
    for x, w in enumerate(rows):
        if w & vc in members:
            lower |= 1 << x
        if w & v not in members:
            upper |= 1 << x
    return lower, upper


def _n3_lower_bits(rows: tuple[int, ...], members: frozenset[int], v: int, full: int) -> int:
    vc = full & ~v
    lower = 0
    for w in rows:
        if w & vc in members:
            lower |= w
    return lower


def _n4_upper_bits(rows: tuple[int, ...], members: frozenset[int], v: int) -> int:
    upper = 0
    for w in rows:
        if w & v not in members:
            upper |= w
    return upper


def yao_approx(q: ApproxQuery) -> ApproxResult:
    v = q.target.bits
    size = q.target.size
    lower = upper = 0
    for x, w in enumerate(_rows(q)):
        if w & ~v == 0:
            lower |= 1 << x
        if w & v:
            upper |= 1 << x
    return _result(lower, upper, size, accuracy_ratio(Subset(lower, size), Subset(upper, size)))


def n1_approx(q: ApproxQuery) -> ApproxResult:
    v, size, full = q.target.bits, q.target.size, q.relation.universe.mask
    lower, upper = _n1_bits(_rows(q), q.primal.masks, v, full)
    accuracy = _primal_accuracy(Subset(lower & v, size), Subset(upper | v, size), v)
    return _result(lower, upper, size, accuracy)


def n2_approx(q: ApproxQuery) -> ApproxResult:
    v, size, full = q.target.bits, q.target.size, q.relation.universe.mask
    lower, upper1 = _n1_bits(_rows(q), q.primal.masks, v, full)
    upper = v | upper1
    accuracy = _primal_accuracy(Subset(lower & v, size), Subset(upper, size), v)
    return _result(lower, upper, size, accuracy)


def n3_approx(q: ApproxQuery) -> ApproxResult:
    v, size, full = q.target.bits, q.target.size, q.relation.universe.mask
    rows, members = _rows(q), q.primal.masks
    lower = _n3_lower_bits(rows, members, v, full)
    upper = full & ~_n3_lower_bits(rows, members, full & ~v, full)
    accuracy = _primal_accuracy(Subset(lower & v, size), Subset(upper | v, size), v)
    return _result(lower, upper, size, accuracy)


def n4_approx(q: ApproxQuery) -> ApproxResult:
    v, size, full = q.target.bits, q.target.size, q.relation.universe.mask
    rows, members = _rows(q), q.primal.masks
    upper = _n4_upper_bits(rows, members, v)
    lower = full & ~_n4_upper_bits(rows, members, full & ~v)
    accuracy = _primal_accuracy(Subset(lower & v, size), Subset(upper | v, size), v)
    return _result(lower, upper, size, accuracy)


_DISPATCH: dict[ModelId, Callable[[ApproxQuery], ApproxResult]] = {
    ModelId.YAO: yao_approx,
    ModelId.N1: n1_approx,
    ModelId.N2: n2_approx,
    ModelId.N3: n3_approx,
    ModelId.N4: n4_approx,
}


def approximate(q: ApproxQuery) -> ApproxResult:
    return _DISPATCH[q.model](q)


def approx(
    relation: Relation,
    primal: Primal | None,
    model: ModelId | str,
    kind: Kind | str,
    target: Subset,
) -> ApproxResult:
    """Shorthand for ``approximate(ApproxQuery(...))``; ``primal`` is ignored for Yao."""
    model = ModelId.parse(model) if isinstance(model, str) and not isinstance(model, ModelId) else ModelId(model)
    if model is ModelId.YAO:
        primal = None
    return approximate(ApproxQuery(model, Kind(kind), target, relation, primal))


def approximation_table(
    relation: Relation,
    primal: Primal | None,
    model: ModelId,
    kind: Kind,
) -> list[ApproxResult]:
    """Results for every subset of the universe, indexed by bitmask."""
    universe = relation.universe
    if universe.size > ENUMERATION_CAP:
        raise CapacityError(f"approximation table over {universe.size} elements exceeds cap {ENUMERATION_CAP}")
    return [approx(relation, primal, model, kind, Subset(m, universe.size)) for m in range(universe.mask + 1)]
