"""S-expression syntax for terms and ``.smc`` files.

Objects::

    top  (N k)  (obj O1 O2 ...)

Terms::

    (id O) (zero k) (succ k) (erase O) (dup O) (drop k)
    (comp g f ...)          ; g after f; right-nested
    (tensor f g) (left O) (sym O O) (assoc O O O)
    (fr k g h) (srr k g h) (sdr k g h) (psrr k g h)
    (raise k f) (lower k f)
    name                     ; a definition or a library term

A file is a sequence of ``(def name term)`` forms; ``;`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import ParseError
from .objects import Obj, TOP
from .terms import (
    FR, PSRR, SDR, SRR, Assoc, Comp, Drop, Dup, Eraser, Id, Left, LowerT, RaiseG,
    Succ, Sym, Tensor, Term, Zero,
)


@dataclass(frozen=True)
class Atom:
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class SList:
    items: tuple
    line: int
    col: int


def read_all(text: str) -> list:
    """Parse every top-level form."""
    tokens = list(_tokenize(text))
    forms, pos = [], 0
    while pos < len(tokens):
        form, pos = _read(tokens, pos)
        forms.append(form)
    return forms


def _tokenize(text: str):
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            col, i = col + 1, i + 1
            continue
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield ch, line, col
            col, i = col + 1, i + 1
            continue
        start, scol = i, col
        while i < len(text) and not text[i].isspace() and text[i] not in "();":
            i, col = i + 1, col + 1
        yield text[start:i], line, scol


def _read(tokens: list, pos: int):
    tok, line, col = tokens[pos]
    if tok == ")":
        raise ParseError("unexpected ')'", line, col)
    if tok != "(":
        return Atom(tok, line, col), pos + 1
    items, pos = [], pos + 1
    while True:
        if pos >= len(tokens):
            raise ParseError("unclosed '('", line, col)
        if tokens[pos][0] == ")":
            return SList(tuple(items), line, col), pos + 1
        item, pos = _read(tokens, pos)
        items.append(item)


# -- forms to syntax -------------------------------------------------------------------

def _where(form):
    return form.line, form.col


def _int(form) -> int:
    if not isinstance(form, Atom) or not form.text.isdigit():
        raise ParseError(f"expected a natural number, got {show_form(form)}", *_where(form))
    return int(form.text)


def to_obj(form) -> Obj:
    if isinstance(form, Atom):
        if form.text in ("top", "T"):
            return TOP
        raise ParseError(f"expected an object, got {form.text!r}", *_where(form))
    if not form.items or not isinstance(form.items[0], Atom):
        raise ParseError("expected an object", *_where(form))
    head, args = form.items[0].text, form.items[1:]
    if head == "N":
        if len(args) != 1:
            raise ParseError("(N k) takes one level", *_where(form))
        return Obj((_int(args[0]),))
    if head == "obj":
        out = TOP
        for a in args:
            out = out @ to_obj(a)
        return out
    raise ParseError(f"unknown object former {head!r}", *_where(form))


_OBJ1 = {"id": Id, "erase": Eraser, "dup": Dup, "left": Left}
_INT1 = {"zero": Zero, "succ": Succ, "drop": Drop}
_REC = {"fr": FR, "srr": SRR, "sdr": SDR, "psrr": PSRR}
_COERCE = {"raise": RaiseG, "lower": LowerT}


def to_term(form, env: Mapping[str, Term] | None = None) -> Term:
    env = env or {}
    if isinstance(form, Atom):
        if form.text in env:
            return env[form.text]
        raise ParseError(f"unknown name {form.text!r}", *_where(form))
    if not form.items or not isinstance(form.items[0], Atom):
        raise ParseError("expected a term", *_where(form))
    head, args = form.items[0].text, form.items[1:]

    def arity(k: int):
        if len(args) != k:
            raise ParseError(f"({head} ...) takes {k} argument(s), got {len(args)}", *_where(form))

    if head in _OBJ1:
        arity(1)
        return _OBJ1[head](to_obj(args[0]))
    if head in _INT1:
        arity(1)
        return _INT1[head](_int(args[0]))
    if head == "comp":
        if len(args) < 2:
            raise ParseError("(comp ...) needs at least two terms", *_where(form))
        parts = [to_term(a, env) for a in args]
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = Comp(p, out)
        return out
    if head == "tensor":
        arity(2)
        return Tensor(to_term(args[0], env), to_term(args[1], env))
    if head == "sym":
        arity(2)
        return Sym(to_obj(args[0]), to_obj(args[1]))
    if head == "assoc":
        arity(3)
        return Assoc(*(to_obj(a) for a in args))
    if head in _REC:
        arity(3)
        return _REC[head](_int(args[0]), to_term(args[1], env), to_term(args[2], env))
    if head in _COERCE:
        arity(2)
        return _COERCE[head](_int(args[0]), to_term(args[1], env))
    raise ParseError(f"unknown term former {head!r}", *_where(form))


def parse_term(text: str, env: Mapping[str, Term] | None = None) -> Term:
    forms = read_all(text)
    if len(forms) != 1:
        raise ParseError(f"expected one term, found {len(forms)} forms", 1, 1)
    return to_term(forms[0], env)


def parse_obj(text: str) -> Obj:
    forms = read_all(text)
    if len(forms) != 1:
        raise ParseError(f"expected one object, found {len(forms)} forms", 1, 1)
    return to_obj(forms[0])


def parse_program(text: str, env: Mapping[str, Term] | None = None) -> dict:
    """Definitions of a ``.smc`` file, in order; later ones may use earlier ones."""
    scope = dict(env or {})
    defs: dict = {}
    for form in read_all(text):
        if (
            not isinstance(form, SList)
            or len(form.items) != 3
            or not isinstance(form.items[0], Atom)
            or form.items[0].text != "def"
            or not isinstance(form.items[1], Atom)
        ):
            raise ParseError("top-level forms must be (def name term)", *_where(form))
        name = form.items[1].text
        if name in defs:
            raise ParseError(f"{name!r} is defined twice", *_where(form))
        defs[name] = scope[name] = to_term(form.items[2], scope)
    return defs


# -- printing ------------------------------------------------------------------------

def show_obj(o: Obj) -> str:
    if o.is_top:
        return "top"
    if len(o) == 1:
        return f"(N {o.factors[0]})"
    return "(obj " + " ".join(f"(N {j})" for j in o.factors) + ")"


def show_term(t: Term) -> str:
    match t:
        case Id(o):
            return f"(id {show_obj(o)})"
        case Eraser(o):
            return f"(erase {show_obj(o)})"
        case Dup(o):
            return f"(dup {show_obj(o)})"
        case Left(o):
            return f"(left {show_obj(o)})"
        case Zero(k):
            return f"(zero {k})"
        case Succ(k):
            return f"(succ {k})"
        case Drop(k):
            return f"(drop {k})"
        case Comp():
            parts = []
            while isinstance(t, Comp):
                parts.append(t.outer)
                t = t.inner
            parts.append(t)
            return "(comp " + " ".join(map(show_term, parts)) + ")"
        case Tensor(f, g):
            return f"(tensor {show_term(f)} {show_term(g)})"
        case Sym(x, y):
            return f"(sym {show_obj(x)} {show_obj(y)})"
        case Assoc(x, y, z):
            return f"(assoc {show_obj(x)} {show_obj(y)} {show_obj(z)})"
        case RaiseG(k, f):
            return f"(raise {k} {show_term(f)})"
        case LowerT(k, f):
            return f"(lower {k} {show_term(f)})"
    for name, cls in _REC.items():
        if type(t) is cls:
            return f"({name} {t.k} {show_term(t.base)} {show_term(t.step)})"
    raise TypeError(f"not a term: {t!r}")


def show_form(form) -> str:
    if isinstance(form, Atom):
        return form.text
    return "(" + " ".join(show_form(f) for f in form.items) + ")"
