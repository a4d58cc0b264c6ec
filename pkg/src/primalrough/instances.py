"""Approximation-space instances: YAML instance files, shipped fixtures and seeded random draws.

An instance file is a YAML mapping::

    name: reflexive-cycle
    description: free text
    universe: [i1, i2, i3, i4]
    relation:                # list of [from, to] label pairs
      - [i1, i1]
      - [i1, i2]
    primal:                  # either members (every set) or maximal (antichain)
      mode: weak             # weak | strict
      members: [[], [i2], [i3]]
    primals:                 # optional, named auxiliary primals
      P1: {mode: weak, maximal: [[i1]]}

The accepted shape is exactly :data:`INSTANCE_SCHEMA`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping

import jsonschema
import yaml

from .foundation import RoughSetError, StructuralError, Universe
from .primal import Level, Primal, SetFamily, downward_closure, maximal_members
from .relations import Relation

_LABEL = {"type": ["string", "integer"]}
_SET = {"type": "array", "items": _LABEL}
_PRIMAL_SCHEMA = {
    "type": "object",
    "properties": {
        "mode": {"enum": ["weak", "strict"]},
        "members": {"type": "array", "items": _SET},
        "maximal": {"type": "array", "items": _SET},
    },
    "oneOf": [{"required": ["members"]}, {"required": ["maximal"]}],
    "additionalProperties": False,
}

INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["universe", "relation", "primal"],
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "universe": {"type": "array", "items": _LABEL, "minItems": 1, "maxItems": 64},
        "relation": {"type": "array", "items": {"type": "array", "items": _LABEL, "minItems": 2, "maxItems": 2}},
        "primal": _PRIMAL_SCHEMA,
        "primals": {"type": "object", "additionalProperties": _PRIMAL_SCHEMA},
    },
    "additionalProperties": False,
}

PRIMAL_FILE_SCHEMA = _PRIMAL_SCHEMA


class InstanceFormatError(RoughSetError):
    """An instance or primal file is malformed or fails its declared validation mode."""


@dataclass(frozen=True)
class Instance:
    name: str
    relation: Relation
    primal: Primal
    aux: Mapping[str, Primal] = field(default_factory=dict)
    description: str = ""

    @property
    def universe(self) -> Universe:
        return self.relation.universe


def primal_from_spec(universe: Universe, spec: Mapping, where: str = "primal") -> Primal:
    mode = Level.parse(spec.get("mode", "weak"))
    try:
        if "members" in spec:
            family = SetFamily(universe, [[str(x) for x in m] for m in spec["members"]])
        else:
            family = downward_closure(universe, [[str(x) for x in m] for m in spec["maximal"]])
        return Primal.validated(family, mode)
    except RoughSetError as exc:
        raise InstanceFormatError(f"{where}: {exc}") from exc


def primal_to_spec(primal: Primal, maximal: bool = False) -> dict:
    universe = primal.universe
    key = "maximal" if maximal else "members"
    sets = maximal_members(primal.family) if maximal else list(primal)
    return {"mode": str(primal.level), key: [universe.labels_of(s) for s in sets]}


def instance_from_mapping(data: Mapping, default_name: str = "instance") -> Instance:
    try:
        jsonschema.validate(data, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        location = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InstanceFormatError(f"{location}: {exc.message}") from None
    try:
        universe = Universe(data["universe"])
        relation = Relation.from_pairs(universe, [(str(x), str(y)) for x, y in data["relation"]])
    except StructuralError as exc:
        raise InstanceFormatError(str(exc)) from exc
    primal = primal_from_spec(universe, data["primal"])
    aux = {str(k): primal_from_spec(universe, v, f"primals/{k}") for k, v in (data.get("primals") or {}).items()}
    return Instance(str(data.get("name", default_name)), relation, primal, aux, str(data.get("description", "")))


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return loads_instance(text, default_name=path.stem)


def loads_instance(text: str, default_name: str = "instance") -> Instance:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InstanceFormatError(f"invalid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise InstanceFormatError("instance file must be a mapping")
    return instance_from_mapping(data, default_name)


def dumps_instance(instance: Instance) -> str:
    data = {
        "name": instance.name,
        "universe": list(instance.universe.labels),
        "relation": [list(p) for p in instance.relation.labelled_pairs()],
        "primal": primal_to_spec(instance.primal),
    }
    if instance.description:
        data["description"] = instance.description
    if instance.aux:
        data["primals"] = {k: primal_to_spec(v) for k, v in instance.aux.items()}
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True, default_flow_style=None)


def load_primal_file(path: str | Path, universe: Universe) -> Primal:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise InstanceFormatError(f"invalid YAML in {path}: {exc}") from exc
    try:
        jsonschema.validate(data, PRIMAL_FILE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InstanceFormatError(f"{path}: {exc.message}") from None
    return primal_from_spec(universe, data, str(path))


# -- shipped fixtures ---------------------------------------------------------

FIXTURE_NAMES = (
    "partial-chain",
    "star-symmetric",
    "sparse-loop",
    "reflexive-cycle",
    "swap-pair",
    "before-kind",
    "fan-out",
    "three-point",
    "patients",
)


def data_path(name: str) -> Path:
    return Path(str(resources.files("primalrough") / "data" / name))


def fixture_path(name: str) -> Path:
    return data_path(f"instances/{name}.yaml")


def fixture(name: str) -> Instance:
    return load_instance(fixture_path(name))


def fixtures() -> list[Instance]:
    return [fixture(name) for name in FIXTURE_NAMES]


# -- random instances -----------------------------------------------------------


def random_relation(rng: random.Random, universe: Universe, p: float = 0.5) -> Relation:
    n = universe.size
    return Relation.from_pairs(universe, ((i, j) for i in range(n) for j in range(n) if rng.random() < p))


def random_primal(rng: random.Random, universe: Universe) -> Primal:
    """Downward closure of a random antichain; draws containing the whole universe are redrawn."""
    n, full = universe.size, universe.mask
    while True:
        k = rng.randint(1, n)
        gens = [rng.getrandbits(n) for _ in range(k)]
        if full in gens:
            continue
        return Primal.validated(downward_closure(universe, gens), Level.WEAK)


def random_instance(rng: random.Random, max_size: int = 5, name: str = "random") -> Instance:
    size = rng.randint(1, max_size)
    universe = Universe.of_size(size)
    relation = random_relation(rng, universe)
    primal = random_primal(rng, universe)
    other = random_primal(rng, universe)
    return Instance(name, relation, primal, {"Q": other})


def random_instances(count: int, max_size: int = 5, seed: int = 0) -> Iterator[Instance]:
    rng = random.Random(seed)
    for index in range(count):
        yield random_instance(rng, max_size, name=f"random(seed={seed}, index={index}, size<={max_size})")
