"""Power-set scans: every model on every subset, optionally audited against a printed table.

A reference table is a YAML file listing, per target subset, the printed
``[lower, upper, accuracy]`` cell of each model. Cells that disagree with the
computed values become :class:`Erratum` entries. Computed values are also
cross-checked against the independent oracle when the universe is small
enough, and any disagreement there is reported as a divergence (it signals a
bug, not a printing error).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import yaml

from ..foundation import ENUMERATION_CAP, Accuracy, CapacityError, StructuralError, Subset, Universe, format_accuracy, parse_accuracy
from ..instances import InstanceFormatError, data_path
from ..models import PRIMAL_MODELS, ApproxQuery, ApproxResult, ModelId, approximation_table
from ..primal import Primal
from ..relations import Kind, Relation
from .oracle import ORACLE_CAP, oracle_approx

FIELDS = ("lower", "upper", "accuracy")


@dataclass(frozen=True)
class ReferenceCell:
    lower: Subset
    upper: Subset
    accuracy: Accuracy


@dataclass(frozen=True)
class Reference:
    name: str
    kind: Kind | None
    cells: Mapping[tuple[int, ModelId], ReferenceCell]


@dataclass(frozen=True)
class Erratum:
    target: Subset
    model: ModelId
    field: str
    printed: str
    computed: str

    def describe(self, universe: Universe) -> str:
        return f"V={universe.render(self.target)} {self.model} {self.field}: printed {self.printed}, computed {self.computed}"


@dataclass(frozen=True)
class ScanReport:
    universe: Universe
    kind: Kind
    models: tuple[ModelId, ...]
    targets: tuple[Subset, ...]
    results: Mapping[tuple[int, ModelId], ApproxResult]
    errata: tuple[Erratum, ...] = ()
    divergences: tuple[str, ...] = ()
    oracle_checked: bool = False
    reference: str | None = None

    def cell(self, target: Subset, model: ModelId | str) -> ApproxResult:
        return self.results[(target.bits, ModelId(model))]

    def rows(self) -> list[list[str]]:
        """Header plus one row per target, sets rendered with labels."""
        u = self.universe
        header = ["V"]
        for m in self.models:
            header += [f"lower_{m}", f"upper_{m}", f"sigma_{m}"]
        out = [header]
        for t in self.targets:
            row = [u.render(t)]
            for m in self.models:
                r = self.cell(t, m)
                row += [u.render(r.lower), u.render(r.upper), format_accuracy(r.accuracy)]
            out.append(row)
        return out

    def as_dict(self) -> dict:
        u = self.universe
        return {
            "kind": str(self.kind),
            "models": [str(m) for m in self.models],
            "rows": [
                {
                    "V": u.labels_of(t),
                    **{
                        str(m): {
                            "lower": u.labels_of(self.cell(t, m).lower),
                            "upper": u.labels_of(self.cell(t, m).upper),
                            "boundary": u.labels_of(self.cell(t, m).boundary),
                            "accuracy": format_accuracy(self.cell(t, m).accuracy),
                        }
                        for m in self.models
                    },
                }
                for t in self.targets
            ],
            "reference": self.reference,
            "errata": [
                {"V": u.labels_of(e.target), "model": str(e.model), "field": e.field, "printed": e.printed, "computed": e.computed}
                for e in self.errata
            ],
            "oracle_checked": self.oracle_checked,
            "divergences": list(self.divergences),
        }


def _parse_set(universe: Universe, raw, where: str) -> Subset:
    if raw == "U":
        return universe.full()
    if not isinstance(raw, list):
        raise InstanceFormatError(f"{where}: expected a label list or 'U', got {raw!r}")
    try:
        return universe.subset(str(x) for x in raw)
    except StructuralError as exc:
        raise InstanceFormatError(f"{where}: {exc}") from exc


def parse_reference(data: Mapping, universe: Universe, name: str = "reference") -> Reference:
    if not isinstance(data, Mapping) or not isinstance(data.get("rows"), list):
        raise InstanceFormatError(f"{name}: a reference needs a 'rows' list")
    kind = Kind.parse(str(data["kind"])) if "kind" in data else None
    cells: dict[tuple[int, ModelId], ReferenceCell] = {}
    for i, row in enumerate(data["rows"]):
        where = f"{name}: rows/{i}"
        if not isinstance(row, Mapping) or "V" not in row:
            raise InstanceFormatError(f"{where}: each row needs a 'V' entry")
        target = _parse_set(universe, row["V"], f"{where}/V")
        for key, cell in row.items():
            if key == "V":
                continue
            try:
                model = ModelId.parse(str(key))
            except StructuralError as exc:
                raise InstanceFormatError(f"{where}: {exc}") from exc
            if not isinstance(cell, list) or len(cell) != 3:
                raise InstanceFormatError(f"{where}/{key}: expected [lower, upper, accuracy]")
            try:
                acc = parse_accuracy(str(cell[2]))
            except (ValueError, ZeroDivisionError) as exc:
                raise InstanceFormatError(f"{where}/{key}: bad accuracy {cell[2]!r}") from exc
            cells[(target.bits, model)] = ReferenceCell(
                _parse_set(universe, cell[0], f"{where}/{key}/lower"),
                _parse_set(universe, cell[1], f"{where}/{key}/upper"),
                acc,
            )
    return Reference(str(data.get("name", name)), kind, cells)


def load_reference(path: str | Path, universe: Universe) -> Reference:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise InstanceFormatError(f"invalid YAML in {path}: {exc}") from exc
    return parse_reference(data, universe, path.stem)


def shipped_reference_path(name: str = "printed-table") -> Path:
    return data_path(f"reference/{name}.yaml")


def _compare(target: Subset, model: ModelId, printed: ReferenceCell, got: ApproxResult, u: Universe) -> list[Erratum]:
    out = []
    if printed.lower != got.lower:
        out.append(Erratum(target, model, "lower", u.render(printed.lower), u.render(got.lower)))
    if printed.upper != got.upper:
        out.append(Erratum(target, model, "upper", u.render(printed.upper), u.render(got.upper)))
    if printed.accuracy != got.accuracy:
        out.append(Erratum(target, model, "accuracy", format_accuracy(printed.accuracy), format_accuracy(got.accuracy)))
    return out


def scan_table(
    relation: Relation,
    primal: Primal | None,
    kind: Kind | str = Kind.A,
    models: Sequence[ModelId | str] = PRIMAL_MODELS,
    reference: Reference | None = None,
    nonempty: bool = True,
    cross_check: bool = True,
) -> ScanReport:
    """Compute every model on every subset (the empty one skipped when ``nonempty``).

    Targets are listed by size, then by element order.
    """
    u = relation.universe
    if u.size > ENUMERATION_CAP:
        raise CapacityError(f"scan over {u.size} elements exceeds cap {ENUMERATION_CAP}")
    kind = Kind(kind)
    models = tuple(ModelId.parse(m) if not isinstance(m, ModelId) else m for m in models)
    if primal is None and any(m is not ModelId.YAO for m in models):
        raise StructuralError("primal models need a primal")
    if reference is not None and reference.kind is not None and reference.kind is not kind:
        raise StructuralError(f"reference was printed for kind {reference.kind}, scan requested kind {kind}")

    masks = sorted(range(1 if nonempty else 0, u.mask + 1), key=lambda m: (m.bit_count(), [i for i in range(u.size) if m >> i & 1]))
    targets = tuple(u.from_bits(m) for m in masks)
    results: dict[tuple[int, ModelId], ApproxResult] = {}
    for m in models:
        table = approximation_table(relation, primal, m, kind)
        for t in targets:
            results[(t.bits, m)] = table[t.bits]

    divergences = []
    checked = cross_check and u.size <= ORACLE_CAP
    if checked:
        for m in models:
            for t in targets:
                p = None if m is ModelId.YAO else primal
                want = oracle_approx(ApproxQuery(m, kind, t, relation, p))
                got = results[(t.bits, m)]
                if (want.lower, want.upper, want.accuracy) != (got.lower, got.upper, got.accuracy):
                    divergences.append(f"V={u.render(t)} {m}: models gives {got}, oracle gives {want}")

    errata: list[Erratum] = []
    if reference is not None:
        for t in targets:
            for m in models:
                printed = reference.cells.get((t.bits, m))
                if printed is not None:
                    errata += _compare(t, m, printed, results[(t.bits, m)], u)

    return ScanReport(
        u, kind, models, targets, results, tuple(errata), tuple(divergences), checked, reference.name if reference else None
    )
