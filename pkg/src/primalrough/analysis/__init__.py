"""Law verification, the reference oracle, counterexample search and power-set scans."""

from . import nonproperties  # noqa: F401  (registers the search targets)
from .laws import Category, Law, LawReport, Verdict, catalog, check_laws, refuted
from .oracle import ORACLE_CAP, oracle_approx
from .scan import Erratum, ScanReport, load_reference, scan_table, shipped_reference_path
from .search import CounterexampleReport, SearchBounds, companion_report, search_counterexample

__all__ = [
    "Category",
    "CounterexampleReport",
    "Law",
    "LawReport",
    "Erratum",
    "ORACLE_CAP",
    "ScanReport",
    "SearchBounds",
    "Verdict",
    "catalog",
    "check_laws",
    "companion_report",
    "oracle_approx",
    "load_reference",
    "refuted",
    "scan_table",
    "search_counterexample",
    "shipped_reference_path",
]
