"""Syntactic coercions ``T_k``, ``G_k`` on objects and terms.

``apply_mor`` follows the case tables for the endofunctors on the free
calculus.  Recursion nodes are not covered by those tables: they are
rebuilt from coerced children when the result still type-checks.  A
raising coercion that cannot be pushed inside stays as an explicit
``RaiseG`` node; a lowering coercion that cannot be pushed inside is
refused with ``StrictnessError`` unless it fixes both endpoints or
sends the codomain to the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from . import omega
from .errors import LevelRangeError, StrictnessError, TypingError
from .objects import N, Obj, ObjNF, TOP, coerce_level, coerce_obj, coerce_string
from .terms import (
    FR, PSRR, SDR, SRR, Assoc, Comp, Drop, Dup, Eraser, Id, Left, LowerT,
    RaiseG, Succ, Sym, Tensor, Term, Zero, infer_type, required_n,
)


@dataclass(frozen=True)
class CoercionOpId:
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("T", "G"):
            raise ValueError(f"unknown coercion kind {self.kind!r}")
        if self.k < 0:
            raise LevelRangeError(f"negative coercion index {self.k}")

    def check(self, n: int) -> None:
        if self.k > n - 2:
            raise LevelRangeError(f"{self} needs k <= {n - 2}")

    @classmethod
    def parse(cls, text: str) -> "CoercionOpId":
        text = text.strip()
        if len(text) < 2 or text[0] not in "TG" or not text[1:].lstrip("_").isdigit():
            raise ValueError(f"coercion must look like T0 or G1, got {text!r}")
        return cls(text[0], int(text[1:].lstrip("_")))

    def __str__(self):
        return f"{self.kind}{self.k}"


def T(k: int) -> CoercionOpId:
    return CoercionOpId("T", k)


def G(k: int) -> CoercionOpId:
    return CoercionOpId("G", k)


def _as_obj(x) -> Obj:
    return x.to_obj() if isinstance(x, ObjNF) else x


def apply_obj(c: CoercionOpId, x, n: int | None = None):
    """Coerce an object; ``ObjNF`` in gives ``ObjNF`` out."""
    if n is not None:
        c.check(n)
    if isinstance(x, ObjNF):
        c.check(x.n)
        return coerce_obj(c.kind, c.k, x.to_obj()).normal_form(x.n)
    return coerce_obj(c.kind, c.k, x)


def apply_word(steps: Iterable[CoercionOpId], x):
    """Apply coercions to an object or a term in the order listed.

    If a step is refused on a term but the whole word sends its codomain
    to the unit, the image is the eraser of the coerced domain.
    """
    steps = list(steps)
    if not isinstance(x, Term):
        for c in steps:
            x = apply_obj(c, x)
        return x
    f = x
    for c in steps:
        try:
            x = apply_mor(c, x)
        except StrictnessError:
            ty = infer_type(f, max(required_n(f), max(s.k for s in steps) + 2))
            dom = coerce_string([(s.kind, s.k) for s in steps], ty.dom)
            if coerce_string([(s.kind, s.k) for s in steps], ty.cod).is_top:
                return Eraser(dom)
            raise
    return x


def word_for_map(word: Iterable[CoercionOpId], n: int) -> omega.MonotoneMap:
    """Monoid product of a generator word, read left to right."""
    return reduce(
        omega.compose_maps,
        (omega.make_coercion(c.kind, c.k, n) for c in word),
        omega.identity(n),
    )


def relabel_obj(f: omega.MonotoneMap, x: Obj) -> Obj:
    """Object action of a monoid element, level by level."""
    out = []
    for j in x.factors:
        img = omega.relabel_level(f, j)
        if img is not None:
            out.append(img)
    return Obj(tuple(out))


# -- morphisms -----------------------------------------------------------------

def apply_mor(c: CoercionOpId, f: Term, n: int | None = None) -> Term:
    if n is not None:
        c.check(n)
        infer_type(f, n)
    return _T(c.k, f) if c.kind == "T" else _G(c.k, f)


def _G(k: int, f: Term) -> Term:
    g = lambda o: coerce_obj("G", k, o)
    match f:
        case Zero(j):
            return Zero(k + 1) if j == k else f
        case Succ(j):
            return Succ(k + 1) if j == k else f
        case Drop(j):
            if j == k:
                return Id(N(k + 1))
            if j == k - 1:
                return Comp(Drop(k - 1), Drop(k))
            return f
        case Id(o):
            return Id(g(o))
        case Eraser(o):
            return Eraser(g(o))
        case Dup(o):
            return Dup(g(o))
        case Left(o):
            return Left(g(o))
        case Sym(x, y):
            return Sym(g(x), g(y))
        case Assoc(x, y, z):
            return Assoc(g(x), g(y), g(z))
        case Comp(a, b):
            return Comp(_G(k, a), _G(k, b))
        case Tensor(a, b):
            return Tensor(_G(k, a), _G(k, b))
        case FR() | SRR() | SDR() | PSRR():
            rebuilt = _reform(f, "G", k, _G(k, f.base), _G(k, f.step))
            return rebuilt if rebuilt is not None else RaiseG(k, f)
        case RaiseG() | LowerT():
            return RaiseG(k, f)
    raise TypingError(f"cannot coerce {f!r}")


def _T(k: int, f: Term) -> Term:
    t = lambda o: coerce_obj("T", k, o)
    match f:
        case Zero(j):
            if j != k:
                return f
            return Id(TOP) if k == 0 else Zero(k - 1)
        case Succ(j):
            if j != k:
                return f
            return Id(TOP) if k == 0 else Succ(k - 1)
        case Drop(j):
            if k == 0 and j == 0:
                return Eraser(N(1))
            if k != 0 and j == k - 1:
                return Id(N(k - 1))
            if k != 0 and j == k:
                return Comp(Drop(k - 1), Drop(k))
            return f
        case Id(o):
            return Id(t(o))
        case Eraser(o):
            return Eraser(t(o))
        case Dup(o):
            return Dup(t(o))
        case Left(o):
            return Left(t(o))
        case Sym(x, y):
            return Sym(t(x), t(y))
        case Assoc(x, y, z):
            return Assoc(t(x), t(y), t(z))
        case Comp(a, b):
            return Comp(_T(k, a), _T(k, b))
        case Tensor(a, b):
            return Tensor(_T(k, a), _T(k, b))
        case FR() | SRR() | SDR() | PSRR():
            try:
                base, step = _T(k, f.base), _T(k, f.step)
            except StrictnessError:
                base = None
            if base is not None:
                rebuilt = _reform(f, "T", k, base, step)
                if rebuilt is not None:
                    return rebuilt
            return _fixed_or_refuse(k, f)
        case RaiseG(j, body):
            pushed = _G(j, body)
            if not isinstance(pushed, RaiseG):
                return _T(k, pushed)
            return _fixed_or_refuse(k, f)
        case LowerT(j, body):
            return _T(k, _T(j, body))
    raise TypingError(f"cannot coerce {f!r}")


def _fixed_or_refuse(k: int, f: Term) -> Term:
    ty = infer_type(f, _enough_n(f, k))
    dom, cod = coerce_obj("T", k, ty.dom), coerce_obj("T", k, ty.cod)
    if dom == ty.dom and cod == ty.cod:
        return f
    if cod.is_top:
        # the unit is terminal, so there is only one candidate image
        return Eraser(dom)
    raise StrictnessError(f"T{k} cannot be pushed through {type(f).__name__} node")


def _enough_n(f: Term, k: int) -> int:
    return max(required_n(f), k + 2)


def _reform(f: Term, kind: str, k: int, base: Term, step: Term):
    """Rebuild a recursion node from coerced children, or ``None``."""
    j = f.k
    if isinstance(f, FR):
        new_k = coerce_level(kind, k, j)
    else:
        new_counter = coerce_level(kind, k, j + 1)
        new_k = None if new_counter is None or new_counter == 0 else new_counter - 1
    if new_k is None:
        return None
    node = type(f)(new_k, base, step)
    n = max(_enough_n(f, k), _enough_n(node, k))
    try:
        ty = infer_type(node, n)
        orig = infer_type(f, n)
    except (TypingError, LevelRangeError):
        return None
    if ty.dom != coerce_obj(kind, k, orig.dom) or ty.cod != coerce_obj(kind, k, orig.cod):
        return None
    return node


# -- eta, epsilon, chi ----------------------------------------------------------

def _tensor_all(parts: list, empty: Term) -> Term:
    if not parts:
        return empty
    return reduce(Tensor, parts)


def eps_component(k: int, x) -> Term:
    """``epsilon_k X : G_k X -> X``, factor by factor."""
    x = _as_obj(x)
    parts = [Drop(k) if j == k else Id(N(j)) for j in x.factors]
    return _tensor_all(parts, Id(TOP))


def eta_component(k: int, x) -> Term:
    """``eta_k X : X -> T_k X``, factor by factor."""
    x = _as_obj(x)
    parts = []
    for j in x.factors:
        if j != k:
            parts.append(Id(N(j)))
        elif k == 0:
            parts.append(Eraser(N(0)))
        else:
            parts.append(Drop(k - 1))
    return _tensor_all(parts, Id(TOP))


def chi(k: int, x) -> Term:
    """``chi_k X = eta_k X . epsilon_k X : G_k X -> T_k X``."""
    return Comp(eta_component(k, x), eps_component(k, x))


def chi_variants(k: int, x) -> tuple:
    """``(chi_k X, T_k(eps_k X), G_k(eta_k X))``, all ``G_k X -> T_k X``."""
    return (
        chi(k, x),
        apply_mor(T(k), eps_component(k, x)),
        apply_mor(G(k), eta_component(k, x)),
    )


# -- composite coercions -----------------------------------------------------------

def bar_steps(k: int, n: int) -> list:
    """Application order of ``G_{n-2}...G_k T_0...T_{k-1}``.

    The T segment acts first, highest index first; then the G segment in
    ascending order.  This is also the right-to-left reading of the
    monoid word, whose product is the constant map at ``k``.
    """
    if not 0 <= k <= n - 1:
        raise LevelRangeError(f"bar index {k} outside 0..{n - 1}")
    return [T(i) for i in range(k - 1, -1, -1)] + [G(i) for i in range(k, n - 1)]


def bar(k: int, x, n: int | None = None):
    if n is None:
        if not isinstance(x, ObjNF):
            raise ValueError("pass n for a sequence object")
        n = x.n
    return apply_word(bar_steps(k, n), x)


def lower_prefix(k: int) -> list:
    """Application order of ``T_0 ... T_{k-1}`` (``T_{k-1}`` first)."""
    return [T(i) for i in range(k - 1, -1, -1)]


def safe_comp_square(f: Term, k: int, n: int) -> tuple:
    """Both sides of the square that ``T_0...T_{k-1} eta_k`` induces on ``f``.

    ``f`` must land in a power of a single level ``m`` with ``k <= m - 1``.
    Returns ``(path1, path2)``: the coerced ``f`` after ``eta``, and
    ``eta`` after the coerced ``f``.
    """
    ty = infer_type(f, n)
    levels = set(ty.cod.factors)
    if len(levels) > 1:
        raise ValueError(f"codomain {ty.cod} is not a power of one level")
    m = levels.pop() if levels else None
    if not 0 <= k <= n - 2:
        raise LevelRangeError(f"square index {k} outside 0..{n - 2}")
    if m is not None and k > m - 1:
        raise ValueError(f"square needs k <= m - 1; got k={k}, m={m}")
    prefix = lower_prefix(k)
    top = apply_word(prefix, f)
    bottom = apply_word([T(k)] + prefix, f)
    left = apply_word(prefix, eta_component(k, ty.dom))
    right = apply_word(prefix, eta_component(k, ty.cod))
    path1 = Comp(bottom, left)
    path2 = Comp(right, top)
    infer_type(path1, n)
    infer_type(path2, n)
    return path1, path2
