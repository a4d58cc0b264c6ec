"""Yes/no information systems and the decision pipeline built on them.

A table is a CSV file whose header is an object-id column, the attribute
names and optionally a ``Decision`` column. Each object holds the attributes
marked ``Yes``; objects are related when the attributes of the first are a
subset of those of the second. Target classes are then approximated under
any model and classified as definable (empty boundary) or rough.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import yaml

from .foundation import Accuracy, RoughSetError, StructuralError, Subset, Universe, accuracy_ratio, format_accuracy, parse_accuracy
from .instances import InstanceFormatError, data_path, load_primal_file
from .models import ApproxResult, ModelId, approx
from .primal import Primal
from .relations import ALL_KINDS, Kind, Relation

DEFINABLE = "Definable"
ROUGH = "Rough"

_CELLS = {"yes": True, "no": False}


class InfoSystemFormatError(RoughSetError, ValueError):
    """A table cell or row is malformed; ``row`` and ``column`` are 1-based (header is row 1)."""

    def __init__(self, message: str, row: int, column: int | None = None):
        where = f"row {row}" if column is None else f"row {row}, column {column}"
        super().__init__(f"{where}: {message}")
        self.row = row
        self.column = column


@dataclass(frozen=True)
class InfoSystem:
    objects: Universe
    attributes: tuple[str, ...]
    values: tuple[frozenset[str], ...]
    decision: tuple[str, ...] | None = None
    id_column: str = "Person"
    decision_column: str = "Decision"

    def __post_init__(self):
        if len(self.values) != self.objects.size:
            raise StructuralError("one attribute set per object is required")
        for held in self.values:
            if not held <= set(self.attributes):
                raise StructuralError(f"unknown attributes {sorted(held - set(self.attributes))}")
        if self.decision is not None and len(self.decision) != self.objects.size:
            raise StructuralError("one decision label per object is required")

    def held(self, obj: str) -> list[str]:
        """Attributes of ``obj`` in column order."""
        s = self.values[self.objects.index(str(obj))]
        return [a for a in self.attributes if a in s]

    def decision_classes(self) -> dict[str, Subset]:
        if self.decision is None:
            return {}
        out: dict[str, list[str]] = {}
        for label, d in zip(self.objects.labels, self.decision):
            out.setdefault(d, []).append(label)
        return {d: self.objects.subset(members) for d, members in out.items()}


def parse_infosystem(csv_text: str) -> InfoSystem:
    rows = list(csv.reader(io.StringIO(csv_text)))
    while rows and not any(c.strip() for c in rows[-1]):
        rows.pop()
    if not rows:
        raise InfoSystemFormatError("empty table", 1)
    header = [c.strip() for c in rows[0]]
    if len(header) < 2:
        raise InfoSystemFormatError("header needs an id column and at least one attribute", 1)
    has_decision = header[-1].lower() == "decision"
    attributes = header[1:-1] if has_decision else header[1:]
    if not attributes:
        raise InfoSystemFormatError("no attribute columns", 1)
    seen_attr = set()
    for j, a in enumerate(header[1:], start=2):
        if not a:
            raise InfoSystemFormatError("empty column name", 1, j)
        if a in seen_attr:
            raise InfoSystemFormatError(f"duplicate column {a!r}", 1, j)
        seen_attr.add(a)

    ids: list[str] = []
    values: list[frozenset[str]] = []
    decisions: list[str] = []
    for i, raw in enumerate(rows[1:], start=2):
        cells = [c.strip() for c in raw]
        if not any(cells):
            raise InfoSystemFormatError("blank row", i)
        if len(cells) != len(header):
            raise InfoSystemFormatError(f"expected {len(header)} cells, found {len(cells)}", i)
        obj = cells[0]
        if not obj:
            raise InfoSystemFormatError("empty object id", i, 1)
        if obj in ids:
            raise InfoSystemFormatError(f"duplicate object id {obj!r}", i, 1)
        ids.append(obj)
        held = set()
        for j, a in enumerate(attributes, start=2):
            flag = _CELLS.get(cells[j - 1].lower())
            if flag is None:
                raise InfoSystemFormatError(f"cell {cells[j - 1]!r} is not Yes or No", i, j)
            if flag:
                held.add(a)
        values.append(frozenset(held))
        if has_decision:
            decisions.append(cells[-1])
    if not ids:
        raise InfoSystemFormatError("table has no objects", 2)
    return InfoSystem(
        Universe(ids),
        tuple(attributes),
        tuple(values),
        tuple(decisions) if has_decision else None,
        header[0] or "Person",
        header[-1] if has_decision else "Decision",
    )


def load_infosystem(path: str | Path) -> InfoSystem:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_infosystem(text)


def to_csv(system: InfoSystem) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = [system.id_column, *system.attributes]
    if system.decision is not None:
        header.append(system.decision_column)
    w.writerow(header)
    for k, obj in enumerate(system.objects.labels):
        row = [obj] + ["Yes" if a in system.values[k] else "No" for a in system.attributes]
        if system.decision is not None:
            row.append(system.decision[k])
        w.writerow(row)
    return buf.getvalue()


def subset_relation(system: InfoSystem) -> Relation:
    """m relates to n exactly when the attributes of m are among those of n."""
    vals = system.values
    n = len(vals)
    return Relation.from_pairs(system.objects, [(i, j) for i in range(n) for j in range(n) if vals[i] <= vals[j]])


# -- decisions ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """An externally stated approximation, to be checked against computation."""

    target: Subset
    model: ModelId
    kind: Kind
    lower: Subset
    upper: Subset
    accuracy: Accuracy


@dataclass(frozen=True)
class ClaimCheck:
    claim: Claim
    status: str  # "consistent", "mismatch"
    self_consistent: bool
    implied_accuracy: Accuracy
    matching_kinds: tuple[Kind, ...]
    notes: tuple[str, ...]


@dataclass(frozen=True)
class DecisionEntry:
    model: ModelId
    kind: Kind
    result: ApproxResult

    @property
    def classification(self) -> str:
        return DEFINABLE if not self.result.boundary else ROUGH

    @property
    def accuracy_one(self) -> bool:
        return self.result.accuracy == 1


@dataclass(frozen=True)
class DecisionReport:
    target: Subset
    entries: tuple[DecisionEntry, ...]
    relation: Relation
    primal: Primal | None
    notes: tuple[str, ...] = ()
    checks: tuple[ClaimCheck, ...] = ()

    @property
    def universe(self) -> Universe:
        return self.relation.universe

    def entry(self, model: ModelId | str, kind: Kind | str = Kind.A) -> DecisionEntry:
        model, kind = ModelId.parse(str(model)), Kind(kind)
        for e in self.entries:
            if e.model is model and e.kind is kind:
                return e
        raise KeyError((model, kind))

    def as_dict(self) -> dict:
        u = self.universe

        def sets(r):
            return {
                "lower": u.labels_of(r.lower),
                "upper": u.labels_of(r.upper),
                "boundary": u.labels_of(r.boundary),
                "accuracy": format_accuracy(r.accuracy),
            }

        return {
            "target": u.labels_of(self.target),
            "criterion": "Definable iff boundary is empty; sigma == 1 reported separately",
            "results": [
                {"model": str(e.model), "kind": str(e.kind), **sets(e.result), "classification": e.classification, "sigma_is_1": e.accuracy_one}
                for e in self.entries
            ],
            "notes": list(self.notes),
            "claims": [
                {
                    "model": str(c.claim.model),
                    "kind": str(c.claim.kind),
                    "printed": {
                        "lower": u.labels_of(c.claim.lower),
                        "upper": u.labels_of(c.claim.upper),
                        "accuracy": format_accuracy(c.claim.accuracy),
                    },
                    "status": c.status,
                    "self_consistent": c.self_consistent,
                    "implied_accuracy": format_accuracy(c.implied_accuracy),
                    "matching_kinds": [str(k) for k in c.matching_kinds],
                    "notes": list(c.notes),
                }
                for c in self.checks
            ],
        }


def _implied_accuracy(model: ModelId, target: Subset, lower: Subset, upper: Subset) -> Accuracy:
    # the accuracy a printed pair of sets would give under the model's formula
    if model is ModelId.YAO:
        return accuracy_ratio(lower, upper)
    if not target:
        return Fraction(1)
    bottom = upper if model is ModelId.N2 else upper | target
    return accuracy_ratio(lower & target, bottom)


def _triple(r: ApproxResult) -> tuple:
    return (r.lower, r.upper, r.accuracy)


def check_claim(claim: Claim, relation: Relation, primal: Primal | None) -> ClaimCheck:
    u = relation.universe
    got = approx(relation, primal, claim.model, claim.kind, claim.target)
    implied = _implied_accuracy(claim.model, claim.target, claim.lower, claim.upper)
    self_ok = implied == claim.accuracy
    printed = (claim.lower, claim.upper, claim.accuracy)
    matching = tuple(
        k for k in ALL_KINDS if _triple(approx(relation, primal, claim.model, k, claim.target)) == printed
    )
    same = _triple(got) == printed
    notes = []
    if not same:
        for name in ("lower", "upper"):
            said, computed = getattr(claim, name), getattr(got, name)
            if said != computed:
                notes.append(f"{name}: printed {u.render(said)}, computed {u.render(computed)}")
        if claim.accuracy != got.accuracy:
            notes.append(f"accuracy: printed {format_accuracy(claim.accuracy)}, computed {format_accuracy(got.accuracy)}")
    if not self_ok:
        notes.append(
            f"printed sets give accuracy {format_accuracy(implied)} under {claim.model}, not the printed {format_accuracy(claim.accuracy)}"
        )
    if not same and matching:
        notes.append("printed values match kind " + ", ".join(str(k) for k in matching) + " instead")
    return ClaimCheck(claim, "consistent" if same else "mismatch", self_ok, implied, matching, tuple(notes))


def parse_claims(data: Mapping, universe: Universe, name: str = "claims") -> list[Claim]:
    if not isinstance(data, Mapping) or not isinstance(data.get("claims"), list):
        raise InstanceFormatError(f"{name}: expected a mapping with a 'claims' list")
    out = []
    for i, c in enumerate(data["claims"]):
        where = f"{name}: claims/{i}"
        try:
            out.append(
                Claim(
                    universe.subset(str(x) for x in c["target"]),
                    ModelId.parse(str(c["model"])),
                    Kind.parse(str(c["kind"])),
                    universe.subset(str(x) for x in c["lower"]),
                    universe.subset(str(x) for x in c["upper"]),
                    parse_accuracy(str(c["accuracy"])),
                )
            )
        except (KeyError, TypeError) as exc:
            raise InstanceFormatError(f"{where}: missing or malformed field {exc}") from None
        except (StructuralError, ValueError, ZeroDivisionError) as exc:
            raise InstanceFormatError(f"{where}: {exc}") from exc
    return out


def load_claims(path: str | Path, universe: Universe) -> list[Claim]:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise InstanceFormatError(f"invalid YAML in {path}: {exc}") from exc
    return parse_claims(data, universe, path.stem)


def analyze_decision(
    system: InfoSystem,
    target: Subset | Iterable[str],
    primal: Primal | None,
    models: Sequence[ModelId | str] = (ModelId.YAO, ModelId.N3),
    kinds: Sequence[Kind | str] = (Kind.A,),
    claims: Sequence[Claim] = (),
) -> DecisionReport:
    """Approximate ``target`` under every requested (model, kind) over the subset relation.

    ``claims`` about ``target`` under one of the requested models are checked and reported.
    """
    u = system.objects
    if not isinstance(target, Subset):
        target = u.subset(str(x) for x in target)
    u.conforms(target)
    relation = subset_relation(system)
    models = tuple(m if isinstance(m, ModelId) else ModelId.parse(m) for m in models)
    kinds = tuple(Kind(k) for k in kinds)
    if primal is None and any(m is not ModelId.YAO for m in models):
        raise StructuralError("primal models need a primal")
    entries = tuple(DecisionEntry(m, k, approx(relation, primal, m, k, target)) for m in models for k in kinds)

    notes = []
    if primal is not None and any(m is not ModelId.YAO for m in models) and not primal.is_strict():
        notes.append("the primal is weak: it is proper and downward closed but does not split intersections")
    for e in entries:
        if e.model is not ModelId.YAO and e.accuracy_one != (e.classification == DEFINABLE):
            notes.append(
                f"{e.model}/{e.kind}: accuracy {format_accuracy(e.result.accuracy)} and boundary criterion disagree ({e.classification})"
            )
    checks = tuple(check_claim(c, relation, primal) for c in claims if c.target == target and c.model in models)
    return DecisionReport(target, entries, relation, primal, tuple(notes), checks)


# -- shipped example ---------------------------------------------------------------------------


def patients() -> InfoSystem:
    return load_infosystem(data_path("patients.csv"))


def patients_primal(system: InfoSystem | None = None) -> Primal:
    system = system or patients()
    return load_primal_file(data_path("patients-primal.yaml"), system.objects)


def patients_claims(system: InfoSystem | None = None) -> list[Claim]:
    system = system or patients()
    return load_claims(data_path("reference/patients-claims.yaml"), system.objects)
