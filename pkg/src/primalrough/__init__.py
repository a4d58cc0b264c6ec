"""Rough set approximations built from binary relations and primal families of subsets."""

__version__ = "0.1.0"

from .foundation import (
    ENUMERATION_CAP,
    MAX_UNIVERSE,
    UNDEFINED,
    CapacityError,
    RoughSetError,
    StructuralError,
    Subset,
    Universe,
    format_accuracy,
)
from .relations import ALL_KINDS, Kind, Relation, is_reflexive, is_serial, neighborhood, neighborhood_map
from .primal import Level, Primal, PrimalRejected, SetFamily, validate_family, validate_ideal
from .models import ALL_MODELS, PRIMAL_MODELS, ApproxQuery, ApproxResult, ModelId, approx, approximate, approximation_table
from .instances import Instance, InstanceFormatError, fixture, fixtures, load_instance, loads_instance
from .infosys import InfoSystem, analyze_decision, parse_infosystem, subset_relation, to_csv

__all__ = [
    "ALL_KINDS",
    "ALL_MODELS",
    "ENUMERATION_CAP",
    "MAX_UNIVERSE",
    "PRIMAL_MODELS",
    "UNDEFINED",
    "ApproxQuery",
    "ApproxResult",
    "CapacityError",
    "InfoSystem",
    "Instance",
    "InstanceFormatError",
    "Kind",
    "Level",
    "ModelId",
    "Primal",
    "PrimalRejected",
    "Relation",
    "RoughSetError",
    "SetFamily",
    "StructuralError",
    "Subset",
    "Universe",
    "analyze_decision",
    "approx",
    "approximate",
    "approximation_table",
    "fixture",
    "fixtures",
    "format_accuracy",
    "is_reflexive",
    "is_serial",
    "load_instance",
    "loads_instance",
    "neighborhood",
    "neighborhood_map",
    "parse_infosystem",
    "subset_relation",
    "to_csv",
    "validate_family",
    "validate_ideal",
]
