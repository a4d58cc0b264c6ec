"""Command-line interface: ``primalrough <command> ...``.

Exit codes: 0 success, 1 a law failed, 2 bad input, 3 search exhausted
without a witness.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .analysis import Category, Verdict, check_laws, companion_report, search_counterexample
from .analysis.laws import REGISTRY, Env, evaluate, resolve
from .analysis.nonproperties import TARGETS
from .analysis.scan import load_reference, scan_table, shipped_reference_path
from .analysis.search import SearchBounds, target
from .foundation import RoughSetError, format_accuracy
from .infosys import analyze_decision, load_claims, load_infosystem
from .instances import FIXTURE_NAMES, Instance, data_path, fixture_path, load_instance, load_primal_file, random_instances
from .models import PRIMAL_MODELS, ModelId, approx
from .primal import Level, maximal_members
from .relations import ALL_KINDS, Kind

EXIT_OK, EXIT_LAW_FAILED, EXIT_INPUT, EXIT_EXHAUSTED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


# -- argument helpers -------------------------------------------------------------------------


def _resolve(spec: str, shipped) -> Path:
    """A path if it exists, else the name of a shipped file."""
    p = Path(spec)
    if p.exists() or "/" in spec or spec.endswith((".yaml", ".yml", ".csv")):
        return p
    return shipped(spec)


def _instance(spec: str) -> Instance:
    return load_instance(_resolve(spec, fixture_path))


def _models(text: str) -> list[ModelId]:
    return [ModelId.parse(part) for part in text.split(",") if part.strip()]


def _kinds(text: str) -> list[Kind]:
    if text.strip().lower() == "all":
        return list(ALL_KINDS)
    return [Kind.parse(part) for part in text.split(",") if part.strip()]


def _pick_primal(inst: Instance, name: str | None):
    if name is None or name == "P":
        return inst.primal
    try:
        return inst.aux[name]
    except KeyError:
        raise RoughSetError(f"instance {inst.name!r} has no primal named {name!r}; available: P, {', '.join(inst.aux) or '-'}") from None


# -- rendering --------------------------------------------------------------------------------


def _table(fmt: str, header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in [header, *rows])
    cells = [[c.replace("|", "\\|") for c in r] for r in [header, *rows]]
    lines = ["| " + " | ".join(cells[0]) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in cells[1:]]
    return "\n".join(lines)


def _emit(fmt: str, payload, header=None, rows=None, extra: Sequence[str] = ()) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
        return
    print(_table(fmt, header, rows))
    prefix = "# " if fmt == "tsv" else ""
    for line in extra:
        print(prefix + line)


# -- commands ---------------------------------------------------------------------------------


def cmd_approx(args) -> int:
    inst = _instance(args.instance)
    u = inst.universe
    target_set = u.parse(args.set)
    model = ModelId.parse(args.model)
    primal = None if model is ModelId.YAO else _pick_primal(inst, args.primal)
    r = approx(inst.relation, primal, model, Kind.parse(args.kind), target_set)
    payload = {
        "instance": inst.name,
        "model": str(model),
        "kind": args.kind,
        "V": u.labels_of(target_set),
        "lower": u.labels_of(r.lower),
        "upper": u.labels_of(r.upper),
        "boundary": u.labels_of(r.boundary),
        "accuracy": format_accuracy(r.accuracy),
        "definable": r.definable,
    }
    rows = [[k, u.render(getattr(r, k))] for k in ("lower", "upper", "boundary")]
    rows.append(["accuracy", format_accuracy(r.accuracy)])
    _emit(args.format, payload, ["field", "value"], rows)
    return EXIT_OK


def cmd_scan(args) -> int:
    inst = _instance(args.instance)
    models = _models(args.models)
    reference = None
    if args.reference:
        reference = load_reference(_resolve(args.reference, shipped_reference_path), inst.universe)
    primal = _pick_primal(inst, args.primal)
    report = scan_table(inst.relation, primal, Kind.parse(args.kind), models, reference, nonempty=not args.all)
    u = inst.universe
    extra = [f"oracle cross-check: {'agrees' if not report.divergences else 'DIVERGES'}" if report.oracle_checked else "oracle cross-check: skipped"]
    extra += [f"divergence: {d}" for d in report.divergences]
    if reference is not None:
        extra.append(f"reference {reference.name}: {len(report.errata)} disagreeing cells")
        extra += [f"erratum: {e.describe(u)}" for e in report.errata]
    payload = {"instance": inst.name, **report.as_dict()}
    rows = report.rows()
    _emit(args.format, payload, rows[0], rows[1:], extra)
    return EXIT_INPUT if report.divergences else EXIT_OK


def _verify_instances(args) -> list[Instance]:
    if args.random:
        if args.instance:
            raise RoughSetError("give either an instance or --random, not both")
        return list(random_instances(args.random, args.size, args.seed))
    if not args.instance:
        raise RoughSetError("an instance (file or fixture name) or --random N is required")
    return [_instance(args.instance)]


def cmd_verify(args) -> int:
    ids = [x.strip() for x in args.laws.split(",") if x.strip()] if args.laws else None
    category = None if args.category == "all" else Category(args.category)
    laws = resolve(ids, category)
    kinds = _kinds(args.kinds)
    reports = []
    for inst in _verify_instances(args):
        env = Env(inst.relation, inst.primal, inst.aux)
        for law in laws:
            rep = evaluate(law, env, kinds, inst.name)
            reports.append((rep, env))
    failed = [r for r, _ in reports if r.verdict is Verdict.FAILS]
    payload = {
        "reports": [r.as_dict(env) for r, env in reports],
        "summary": {str(v): sum(1 for r, _ in reports if r.verdict is v) for v in Verdict},
    }
    shown = [(r, e) for r, e in reports if args.all or r.verdict is not Verdict.HOLDS] if args.random else reports
    rows = [[r.law, r.instance, str(r.verdict), r.witness_text or r.reason] for r, _ in shown]
    summary = ", ".join(f"{k} {v}" for k, v in payload["summary"].items())
    _emit(args.format, payload, ["law", "instance", "verdict", "detail"], rows, [f"{len(reports)} checks: {summary}"])
    return EXIT_LAW_FAILED if failed else EXIT_OK


def cmd_search(args) -> int:
    if args.list:
        rows = [[t.id, "remark" if t.remark else "other", t.companion, t.law.statement] for t in TARGETS.values()]
        _emit(args.format, [dict(zip(["target", "group", "companion", "statement"], r)) for r in rows], ["target", "group", "companion", "statement"], rows)
        return EXIT_OK
    if not args.target:
        raise RoughSetError("--target is required (see --list)")
    target(args.target)
    bounds = SearchBounds(
        max_size=args.max_size,
        max_instances=args.max_instances,
        seed=args.seed,
        random_draws=args.draws if args.seed is not None else 0,
        level=Level.parse(args.level),
    )
    rep = search_counterexample(args.target, bounds)
    payload = rep.as_dict()
    extra = []
    if args.companion:
        comp = companion_report(args.target)
        payload["companion"] = {"fixture": TARGETS[args.target].companion, **comp.as_dict()}
        extra.append(f"companion {TARGETS[args.target].companion}: {comp.verdict} {comp.witness_text}".rstrip())
    if rep.found:
        inst = rep.instance
        u = inst.universe
        rows = [
            ["target", rep.target],
            ["statement", rep.statement],
            ["examined", str(rep.examined)],
            ["instance", inst.name],
            ["universe", ", ".join(u.labels)],
            ["relation", " ".join(f"{a}->{b}" for a, b in inst.relation.labelled_pairs()) or "(empty)"],
            ["primal maximal", " ".join(u.render(s) for s in maximal_members(inst.primal.family))],
        ]
        rows += [[f"primal {k} maximal", " ".join(u.render(s) for s in maximal_members(v.family))] for k, v in inst.aux.items()]
        rows.append(["witness", rep.witness_text])
    else:
        rows = [["target", rep.target], ["statement", rep.statement], ["examined", str(rep.examined)], ["witness", "none found"]]
    _emit(args.format, payload, ["field", "value"], rows, extra)
    return EXIT_OK if rep.found else EXIT_EXHAUSTED


def cmd_infosys(args) -> int:
    system = load_infosystem(_resolve(args.csv, lambda n: data_path(f"{n}.csv")))
    models = _models(args.model)
    primal = None
    if args.primal_path:
        primal = load_primal_file(_resolve(args.primal_path, lambda n: data_path(f"{n}.yaml")), system.objects)
    elif any(m is not ModelId.YAO for m in models):
        raise RoughSetError("primal models need --primal-path")
    claims = []
    if args.claims:
        claims = load_claims(_resolve(args.claims, shipped_reference_path), system.objects)
    u = system.objects
    target_set = u.parse(args.target)
    report = analyze_decision(system, target_set, primal, models, _kinds(args.kind), claims)
    rows = [
        [
            str(e.model),
            str(e.kind),
            u.render(e.result.lower),
            u.render(e.result.upper),
            u.render(e.result.boundary),
            format_accuracy(e.result.accuracy),
            e.classification,
            "yes" if e.accuracy_one else "no",
        ]
        for e in report.entries
    ]
    extra = ["classification: Definable iff the boundary is empty"]
    extra += [f"note: {n}" for n in report.notes]
    for c in report.checks:
        head = f"claim {c.claim.model}/{c.claim.kind}: {c.status}"
        extra.append(head + ("" if not c.notes else " (" + "; ".join(c.notes) + ")"))
    _emit(args.format, report.as_dict(), ["model", "kind", "lower", "upper", "boundary", "sigma", "class", "sigma=1"], rows, extra)
    return EXIT_OK


def cmd_list(args) -> int:
    if args.what == "fixtures":
        rows = [[n, _instance(n).description.strip()] for n in FIXTURE_NAMES]
        header = ["fixture", "description"]
    else:
        laws = [law for law in REGISTRY.values() if args.what == "laws" or str(law.category) == args.what]
        rows = [[law.id, str(law.category), law.statement, ", ".join(sorted(law.requires)) or "-"] for law in laws]
        header = ["law", "category", "statement", "requires"]
    _emit(args.format, [dict(zip(header, r)) for r in rows], header, rows)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primalrough", description="Rough approximations over primal set families.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--format", choices=("json", "tsv", "md"), default="tsv")
        p.set_defaults(func=fn)
        return p

    p = add("approx", cmd_approx, "Approximate one subset under one model and kind.")
    p.add_argument("instance", help="instance YAML file or shipped fixture name")
    p.add_argument("--model", required=True, help="Yao, N1, N2, N3 or N4")
    p.add_argument("--kind", default="a", help="neighborhood kind: a, b, u or i")
    p.add_argument("--set", required=True, help="comma-separated labels; empty string for the empty set")
    p.add_argument("--primal", help="use a named extra primal of the instance instead of P")

    p = add("scan", cmd_scan, "Tabulate models over every subset, optionally against a reference table.")
    p.add_argument("instance")
    p.add_argument("--kind", default="a")
    p.add_argument("--models", default=",".join(str(m) for m in PRIMAL_MODELS))
    p.add_argument("--reference", help="reference table YAML, or a shipped name such as printed-table")
    p.add_argument("--primal")
    p.add_argument("--all", action="store_true", help="include the empty set")

    p = add("verify", cmd_verify, "Check laws on an instance or on seeded random instances.")
    p.add_argument("instance", nargs="?")
    p.add_argument("--random", type=int, default=0, metavar="N")
    p.add_argument("--size", type=int, default=5, help="largest random universe")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--laws", help="comma-separated law ids (default: the whole category)")
    p.add_argument("--category", choices=("catalog", "refuted", "non-property", "all"), default="catalog")
    p.add_argument("--kinds", default="all")
    p.add_argument("--all", action="store_true", help="with --random, also list laws that hold")

    p = add("search", cmd_search, "Search small spaces for a counterexample to a target property.")
    p.add_argument("--target")
    p.add_argument("--list", action="store_true", help="list search targets")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--max-instances", type=int, default=SearchBounds.max_instances)
    p.add_argument("--seed", type=int, help="enables a seeded random phase after enumeration")
    p.add_argument("--draws", type=int, default=1000, help="random instances drawn when --seed is set")
    p.add_argument("--level", default="weak", help="primals enumerated: weak or strict")
    p.add_argument("--companion", action="store_true", help="also evaluate the target's shipped companion fixture")

    p = add("infosys", cmd_infosys, "Classify a target set of a yes/no information system.")
    p.add_argument("csv", help="CSV file, or the shipped name patients")
    p.add_argument("--primal-path", help="primal YAML (mode plus members or maximal)")
    p.add_argument("--target", required=True)
    p.add_argument("--model", default="Yao,N3")
    p.add_argument("--kind", default="a")
    p.add_argument("--claims", help="claims YAML to audit, or a shipped name such as patients-claims")

    p = add("list", cmd_list, "List fixtures, laws or search targets.")
    p.add_argument("what", choices=("fixtures", "laws", "catalog", "refuted", "non-property"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RoughSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
