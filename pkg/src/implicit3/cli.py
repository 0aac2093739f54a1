"""Command-line interface.

Plain-text output is line oriented and canonically ordered; ``--json`` prints a
single document matching the schema in ``implicit3/schemas/<command>.json``.
Exit codes: 0 for yes/complete/all verified, 1 for no/incomplete/refuted,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .classes import REGISTRY, binary_fragment, descriptor, unary_fragment, violation
from .closure import closure_fragment, enumerate_unary_monoids
from .core import LogicError, Permutation, System, dual_transform, parse_literal, set_max_arity
from .criterion import check_implicit_completeness, check_weak_completeness
from .verify import REFUTED, SUITES, run_paper_suite


class InputError(LogicError):
    pass


def load_system(path: str | Path) -> System:
    """Read a system file: ``{"name": ..., "functions": [{"name": ..., "table": ...}]}``."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("functions"), list):
        raise InputError(f"{path}: expected an object with a 'functions' list")
    tables = []
    for i, entry in enumerate(data["functions"]):
        if not isinstance(entry, dict) or not isinstance(entry.get("table"), str):
            raise InputError(f"{path}: function {i} needs a string 'table'")
        tables.append(entry["table"])
    if len(set(tables)) != len(tables):
        dup = next(t for t in tables if tables.count(t) > 1)
        raise InputError(f"{path}: duplicate function {dup}")
    return System.of(str(data.get("name", Path(path).stem)), *(parse_literal(t) for t in tables))


def _digits(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    out = []
    for ch in text.replace(",", ""):
        if ch not in "012":
            raise InputError(f"constant list {text!r} may only contain 0, 1, 2")
        out.append(int(ch))
    return tuple(sorted(set(out)))


def _emit(args, doc: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def cmd_check(args) -> int:
    system = load_system(args.file)
    verdict = (check_weak_completeness if args.weak else check_implicit_completeness)(system)
    lines = [verdict.status.lower()]
    if verdict.complete:
        for cid, e in verdict.witnesses.items():
            lines.append(f"{cid}: {e.function.literal} ({e.violation.summary()})")
    else:
        lines.append("contained in: " + ", ".join(verdict.containing_classes))
    _emit(args, verdict.to_json(system), lines)
    return 0 if verdict.complete else 1


def cmd_member(args) -> int:
    f = parse_literal(args.fn)
    cid = descriptor(args.cls).id
    v = violation(f, cid)
    doc = {"class": cid, "function": f.literal, "member": v is None, "witness": None if v is None else v.to_json()}
    _emit(args, doc, ["yes"] if v is None else ["no", v.summary()])
    return 0 if v is None else 1


def cmd_classes(args) -> int:
    ds = [d for d in REGISTRY if d.contains_all_constants or not args.constants_only]
    lines = [f"{d.id}\t{d.kind}\t{'all-constants' if d.contains_all_constants else '-'}\t{d.definition}" for d in ds]
    _emit(args, {"count": len(ds), "classes": [d.to_json() for d in ds]}, lines)
    return 0


def cmd_fragment(args) -> int:
    cid = descriptor(args.cls).id
    frag = unary_fragment(cid) if args.arity == 1 else binary_fragment(cid)
    lits = [f.literal for f in frag]
    _emit(args, {"class": cid, "arity": args.arity, "count": len(lits), "functions": lits}, lits)
    return 0


def cmd_closure(args) -> int:
    system = load_system(args.file)
    frag = closure_fragment(system, args.arity, budget=args.budget)
    lits = frag.literals
    doc = {
        "system": system.name,
        "arity": args.arity,
        "count": len(lits),
        "generators": [f.literal for f in system],
        "functions": lits,
    }
    _emit(args, doc, lits)
    return 0


def cmd_monoids(args) -> int:
    ms = enumerate_unary_monoids(_digits(args.require), _digits(args.forbid), args.mod_duality)
    doc = {"count": len(ms), "mod_duality": args.mod_duality, "monoids": [m.literals for m in ms]}
    _emit(args, doc, [" ".join(m.literals) for m in ms])
    return 0


def cmd_dual(args) -> int:
    pi = Permutation.parse(args.perm)
    f = parse_literal(args.literal)
    g = dual_transform(f, pi)
    _emit(args, {"permutation": pi.literal, "input": f.literal, "output": g.literal}, [g.literal])
    return 0


def cmd_verify(args) -> int:
    reports = run_paper_suite(args.suite or "all")
    refuted = [r for r in reports if r.status == REFUTED]
    lines = [r.line() for r in reports]
    if refuted:
        first = refuted[0]
        lines.append(f"first refuted: {first.claim}")
        lines.append("counterexample: " + json.dumps(first.to_json()["evidence"]["counterexample"], sort_keys=True))
    doc = {"reports": [r.to_json() for r in reports], "refuted": len(refuted)}
    _emit(args, doc, lines)
    return 1 if refuted else 0


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print one JSON document")
    p.add_argument("--max-arity", type=int, default=argparse.SUPPRESS, help="arity cap (default 8, or P3_MAX_ARITY)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="implicit3", description="Implicit completeness in three-valued logic.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide implicit (or weak) completeness of a system file")
    p.add_argument("--weak", action="store_true", help="adjoin the three constants first")
    p.add_argument("file")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("member", parents=[common], help="test membership of a function in a class")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--fn", required=True)
    p.set_defaults(run=cmd_member)

    p = sub.add_parser("classes", parents=[common], help="list the 54 classes")
    p.add_argument("--constants-only", action="store_true", help="only classes containing all constants")
    p.set_defaults(run=cmd_classes)

    p = sub.add_parser("fragment", parents=[common], help="members of a class of arity 1 or 2")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--arity", type=int, choices=(1, 2), required=True)
    p.set_defaults(run=cmd_fragment)

    p = sub.add_parser("closure", parents=[common], help="m-ary part of the clone generated by a system file")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="maximum number of members")
    p.add_argument("file")
    p.set_defaults(run=cmd_closure)

    p = sub.add_parser("monoids", parents=[common], help="closed sets of unary functions containing the identity")
    p.add_argument("--require", help="constants that must be present, e.g. 01")
    p.add_argument("--forbid", help="constants that must be absent, e.g. 2")
    p.add_argument("--mod-duality", action="store_true", help="one representative per duality orbit")
    p.set_defaults(run=cmd_monoids)

    p = sub.add_parser("dual", parents=[common], help="conjugate a function by a permutation")
    p.add_argument("--perm", required=True, help="images of 0, 1, 2, e.g. 102")
    p.add_argument("literal")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("verify", parents=[common], help="run structural checks")
    p.add_argument("--suite", choices=sorted(SUITES), help="one suite (default: all)")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    try:
        if getattr(args, "max_arity", None) is not None:
            set_max_arity(args.max_arity)
        return args.run(args)
    except LogicError as exc:
        print(f"implicit3 {args.command}: {exc}", file=sys.stderr)
        return 2
    finally:
        set_max_arity(None)


if __name__ == "__main__":
    sys.exit(main())
