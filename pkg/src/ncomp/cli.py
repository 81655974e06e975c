"""Command-line front end: ``ncomp <command> ...``.

Exit status is 0 on success, 1 on a parse, typing or law failure and 2
when evaluation runs out of fuel.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import chains, omega
from .coerce import CoercionOpId, apply_obj, apply_mor
from .errors import FuelExhausted, LevelRangeError, NCompError, ParseError
from .evaluate import DEFAULT_FUEL, denote, normalize_point, point_level
from .library import species_signature, stdlib, strict_check
from .props import DEFAULT_BOUND, SUITES, run_suite
from .sexpr import parse_program, parse_term, read_all, show_obj, show_term, to_obj
from .terms import Term, infer_type


@dataclass
class Workspace:
    n: int = 4
    fuel: int = DEFAULT_FUEL
    bound: int = DEFAULT_BOUND
    strict: bool = False
    json: bool = False
    definitions: dict = field(default_factory=dict)

    def scope(self) -> dict:
        return {**stdlib(), **self.definitions}

    def load(self, path: str | None) -> None:
        if not path:
            return
        text = sys.stdin.read() if path == "-" else _read_file(path)
        self.definitions = parse_program(text, stdlib())
        for name, t in self.definitions.items():
            infer_type(t, self.n)
            if self.strict and not strict_check(t):
                raise NCompError(f"{name}: lowering coercion not allowed in strict mode")

    def term(self, text: str) -> Term:
        scope = self.scope()
        if text.lstrip().startswith("("):
            return parse_term(text, scope)
        if text not in scope:
            raise ParseError(f"unknown name {text!r}", 1, 1)
        return scope[text]


def _read_file(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


class Output:
    def __init__(self, ws: Workspace):
        self.ws = ws

    def emit(self, text: str, data: dict) -> None:
        if self.ws.json:
            print(json.dumps(data, sort_keys=True))
        else:
            print(text)


# -- commands -------------------------------------------------------------------------

def cmd_check(ws: Workspace, out: Output, args) -> int:
    ws.load(args.file_arg or getattr(args, "file", None))
    rows = []
    for name, t in ws.definitions.items():
        ty = infer_type(t, ws.n)
        rows.append({
            "name": name, "dom": str(ty.dom), "cod": str(ty.cod),
            "species": str(species_signature(t, ws.n)), "strict": strict_check(t),
        })
    text = "\n".join(f"{r['name']} : {r['dom']} -> {r['cod']}  {r['species']}" for r in rows)
    out.emit(text or "no definitions", {"ok": True, "definitions": rows})
    return 0


def cmd_eval(ws: Workspace, out: Output, args) -> int:
    ws.load(getattr(args, "file", None))
    t = ws.term(args.name)
    if ws.strict and not strict_check(t):
        raise NCompError("lowering coercion not allowed in strict mode")
    values = [_nat(a) for a in args.args]
    result = denote(t, values, ws.n, ws.fuel)
    out.emit(" ".join(map(str, result)), {"ok": True, "term": args.name, "args": values,
                                         "values": list(result)})
    return 0


def cmd_normalize(ws: Workspace, out: Output, args) -> int:
    ws.load(getattr(args, "file", None))
    t = ws.term(args.expr)
    m, k = normalize_point(t, ws.n, ws.fuel), point_level(t, ws.n)
    out.emit(f"s^{m} 0 : N{k}", {"ok": True, "succ": m, "level": k})
    return 0


def cmd_species(ws: Workspace, out: Output, args) -> int:
    ws.load(getattr(args, "file", None))
    sig = species_signature(ws.term(args.name), ws.n)
    out.emit(str(sig), {"ok": True, "name": args.name, "species": str(sig),
                        "args": list(sig.arg_species), "out": sig.out_level})
    return 0


def cmd_coerce(ws: Workspace, out: Output, args) -> int:
    ws.load(getattr(args, "file", None))
    ops = [CoercionOpId.parse(p) for p in args.op.split(",")]
    for c in ops:
        c.check(ws.n)
    target = args.target
    if _looks_like_obj(target):
        o = to_obj(read_all(target)[0])
        o.check_range(ws.n)
        # the word is written as a composite: rightmost acts first
        for c in reversed(ops):
            o = apply_obj(c, o)
        out.emit(show_obj(o), {"ok": True, "object": show_obj(o), "profile": list(o.normal_form(ws.n).alphas)})
        return 0
    t = ws.term(target)
    infer_type(t, ws.n)
    for c in reversed(ops):
        t = apply_mor(c, t, ws.n)
    ty = infer_type(t, ws.n)
    out.emit(f"{show_term(t)}\n  : {ty}", {"ok": True, "term": show_term(t),
                                           "dom": str(ty.dom), "cod": str(ty.cod)})
    return 0


def _looks_like_obj(text: str) -> bool:
    s = text.strip()
    return s in ("top", "T") or s.startswith("(N ") or s.startswith("(obj")


def cmd_enumerate(ws: Workspace, out: Output, args) -> int:
    n = args.size
    maps = sorted(omega.enumerate_monoid(n), key=lambda f: f.images)
    cells = omega.generate_cells(n)
    brute = omega.all_monotone(n)
    ok = set(maps) == brute
    lines = [f"{len(maps)} maps", f"{len(cells)} cells"]
    if args.list:
        lines += [f"  {f.images}" for f in maps]
    out.emit("\n".join(lines), {"ok": ok, "n": n, "maps": [list(f.images) for f in maps],
                                "cells": len(cells), "brute_force": len(brute)})
    return 0 if ok else 1


def cmd_verify(ws: Workspace, out: Output, args) -> int:
    checks = run_suite(args.suite, ws.bound, ws.n)
    ok = all(c.ok for c in checks)
    text = "\n".join(map(str, checks)) + f"\n{sum(c.ok for c in checks)}/{len(checks)} laws hold"
    out.emit(text, {"ok": ok, "suite": args.suite, "n": ws.n, "bound": ws.bound,
                    "laws": [c.as_dict() for c in checks]})
    return 0 if ok else 1


def cmd_model(ws: Workspace, out: Output, args) -> int:
    n = ws.n
    table = chains.levels_table(n)
    reports = [chains.comprehension_laws(n, args.size, presheaf=p) for p in (False, True)]
    ok = all(e[2] for _, row in table for e in row) and all(r.ok for r in reports)
    lines = [chains.format_levels_table(table, n)]
    for r in reports:
        lines.append(f"\n{'presheaf' if r.presheaf else 'chain'} model, n={n}, sets of size <= {r.bound}:")
        lines += [f"  {'pass' if x.ok else 'FAIL'}  {x.name} ({x.checked} checks){'  ' + x.detail if x.detail else ''}"
                  for x in r.results]
    data = {
        "ok": ok, "n": n,
        "table": {op: [e[0] for e in row] for op, row in table},
        "reports": [{"presheaf": r.presheaf, "ok": r.ok,
                     "laws": [{"law": x.name, "checks": x.checked, "ok": x.ok, "detail": x.detail}
                              for x in r.results]} for r in reports],
    }
    out.emit("\n".join(lines), data)
    return 0 if ok else 1


def _nat(text: str) -> int:
    if not text.isdigit():
        raise ParseError(f"argument {text!r} is not a decimal natural", 1, 1)
    return int(text)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=argparse.SUPPRESS, help="chain length (default 4)")
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS, help="recursion step budget")
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS, help="per-coordinate test bound")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="reject lowering coercions")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--file", default=argparse.SUPPRESS,
                        help=".smc file with definitions ('-' for stdin)")

    p = argparse.ArgumentParser(prog="ncomp", description="Level-indexed recursion calculus toolkit.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="type-check the definitions of a file")
    s.add_argument("file_arg", nargs="?", metavar="FILE")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("eval", parents=[common], help="evaluate a term on decimal arguments")
    s.add_argument("name", help="definition, library name or (term ...)")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("normalize", parents=[common], help="rewrite a closed point to a numeral")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("species", parents=[common], help="print a species signature")
    s.add_argument("name")
    s.set_defaults(func=cmd_species)

    s = sub.add_parser("coerce", parents=[common], help="apply coercions such as T0 or G1,T0")
    s.add_argument("op")
    s.add_argument("target", help="object like (N 1) or a term")
    s.set_defaults(func=cmd_coerce)

    s = sub.add_parser("enumerate", parents=[common], help="generate the monoid and its cells")
    s.add_argument("size", type=int, metavar="N")
    s.add_argument("--list", action="store_true", help="print every map")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", parents=[common], help="run a law suite")
    s.add_argument("suite", choices=["all", *SUITES])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("model", parents=[common], help="levels table and chain-model laws")
    s.add_argument("--size", type=int, default=2, help="largest set size in enumerated chains")
    s.set_defaults(func=cmd_model)
    return p


def main(argv: list | None = None) -> int:
    args = build_parser().parse_args(argv)
    opts = vars(args)
    ws = Workspace(
        n=opts.get("n", 4), fuel=opts.get("fuel", DEFAULT_FUEL), bound=opts.get("bound", DEFAULT_BOUND),
        strict=opts.get("strict", False), json=opts.get("json", False),
    )
    out = Output(ws)
    try:
        if ws.n < 3:
            raise LevelRangeError("the recursive calculus needs n >= 3")
        return args.func(ws, out, args)
    except FuelExhausted as e:
        _fail(ws, f"resource error: {e}", 2)
        return 2
    except ParseError as e:
        _fail(ws, f"parse error: {e}", 1)
        return 1
    except (NCompError, ValueError, KeyError, OSError) as e:
        _fail(ws, f"error: {e}", 1)
        return 1


def _fail(ws: Workspace, message: str, code: int) -> None:
    if ws.json:
        print(json.dumps({"ok": False, "error": message, "exit": code}, sort_keys=True))
    else:
        print(message, file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
