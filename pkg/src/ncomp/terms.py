"""Point-free morphism terms and their type checker.

Every constructor is an immutable dataclass.  Types are ``MorType``
pairs of ``Obj`` sequences; value tuples are laid out along those
sequences, so composition demands an exact match of factor order (use
``Sym`` to reorder).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CompositionError, LevelRangeError, SideConditionError, TypingError
from .objects import N, Obj, ObjNF, TOP, coerce_obj, coerce_string, lowering_steps


class Term:
    __slots__ = ()

    def __call__(self, *args):
        # convenience: g(f) is composition
        out = self
        for f in args:
            out = Comp(out, f)
        return out

    def __matmul__(self, other: "Term") -> "Term":
        return Tensor(self, other)

    def children(self) -> tuple:
        return ()

    def __str__(self):
        from .sexpr import show_term

        return show_term(self)


@dataclass(frozen=True, repr=False)
class Id(Term):
    obj: Obj

    def __repr__(self):
        return f"Id({self.obj})"


@dataclass(frozen=True, repr=False)
class Zero(Term):
    k: int

    def __repr__(self):
        return f"Zero({self.k})"


@dataclass(frozen=True, repr=False)
class Succ(Term):
    k: int

    def __repr__(self):
        return f"Succ({self.k})"


@dataclass(frozen=True)
class Eraser(Term):
    obj: Obj


@dataclass(frozen=True)
class Dup(Term):
    obj: Obj


@dataclass(frozen=True, repr=False)
class Drop(Term):
    """``d_k : N_{k+1} -> N_k``."""

    k: int

    def __repr__(self):
        return f"Drop({self.k})"


@dataclass(frozen=True)
class Comp(Term):
    """``outer . inner``."""

    outer: Term
    inner: Term

    def children(self):
        return (self.outer, self.inner)


@dataclass(frozen=True)
class Tensor(Term):
    left: Term
    right: Term

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Left(Term):
    """Left unitor ``T * X -> X``."""

    obj: Obj


@dataclass(frozen=True)
class Sym(Term):
    x: Obj
    y: Obj


@dataclass(frozen=True)
class Assoc(Term):
    x: Obj
    y: Obj
    z: Obj


@dataclass(frozen=True)
class _Recursion(Term):
    k: int
    base: Term
    step: Term

    def children(self):
        return (self.base, self.step)


class FR(_Recursion):
    """Flat recursion: f(0,u) = g(u), f(m+1,u) = h(m,u)."""


class SRR(_Recursion):
    """Safe ramified recursion: f(0,x) = g(x), f(m+1,x) = h(f(m,x))."""


class SDR(_Recursion):
    """Safe dependent recursion: f(m+1,x) = h(m, x, f(m,x))."""


class PSRR(_Recursion):
    """Parameterized safe ramified recursion: f(m+1,x) = h(x, f(m,x))."""


RECURSION_FORMERS = (FR, SRR, SDR, PSRR)


@dataclass(frozen=True)
class RaiseG(Term):
    """``G_k f : G_k X -> G_k Y``."""

    k: int
    body: Term

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class LowerT(Term):
    """``T_k f : T_k X -> T_k Y``; not allowed in strict mode."""

    k: int
    body: Term

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class MorType:
    dom: Obj
    cod: Obj

    def profile(self, n: int) -> tuple:
        return self.dom.normal_form(n), self.cod.normal_form(n)

    def __str__(self):
        return f"{self.dom} -> {self.cod}"


def walk(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        s = stack.pop()
        yield s
        stack.extend(reversed(s.children()))


def size(t: Term) -> int:
    return sum(1 for _ in walk(t))


def required_n(t: Term) -> int:
    """Smallest chain length (at least 3) on which ``t`` can be typed."""
    top = 0
    for s in walk(t):
        match s:
            case Id(o) | Eraser(o) | Dup(o) | Left(o):
                top = max(top, o.max_level)
            case Sym(x, y):
                top = max(top, x.max_level, y.max_level)
            case Assoc(x, y, z):
                top = max(top, x.max_level, y.max_level, z.max_level)
            case Zero(k) | Succ(k):
                top = max(top, k)
            case Drop(k) | RaiseG(k, _) | LowerT(k, _):
                top = max(top, k + 1)
            case FR(k=k):
                top = max(top, k)
            case SRR(k=k) | SDR(k=k) | PSRR(k=k):
                top = max(top, k + 1)
    return max(3, top + 1)


def _check_level(k: int, n: int, hi: int, what: str) -> None:
    if not 0 <= k <= hi:
        raise LevelRangeError(f"{what} index {k} outside 0..{hi} for n={n}")


def _expect(actual: Obj, expected: Obj, what: str, n: int) -> None:
    if actual == expected:
        return
    if actual.normal_form(n) == expected.normal_form(n):
        raise CompositionError(
            f"{what}: {actual} and {expected} agree only up to symmetry; insert a sym"
        )
    raise CompositionError(f"{what}: expected {expected}, got {actual}")


def _side_condition(k: int, cod: Obj, former: str) -> None:
    img = coerce_string(lowering_steps(k), cod)
    if not img.is_top:
        bad = next(j for j in cod.factors if j > k)
        raise SideConditionError(
            f"{former}_{k}: codomain {cod} has factor N{bad} above level {k} "
            f"(T_{k}...T_0 leaves {img})",
            level=bad,
        )


def infer_type(t: Term, n: int) -> MorType:
    if n < 3:
        raise LevelRangeError("the recursive calculus needs n >= 3")
    return _infer(t, n)


def _infer(t: Term, n: int) -> MorType:
    match t:
        case Id(o):
            o.check_range(n)
            return MorType(o, o)
        case Zero(k):
            _check_level(k, n, n - 1, "zero")
            return MorType(TOP, N(k))
        case Succ(k):
            _check_level(k, n, n - 1, "successor")
            return MorType(N(k), N(k))
        case Eraser(o):
            o.check_range(n)
            return MorType(o, TOP)
        case Dup(o):
            o.check_range(n)
            return MorType(o, o @ o)
        case Drop(k):
            _check_level(k, n, n - 2, "drop")
            return MorType(N(k + 1), N(k))
        case Comp(g, f):
            tf, tg = _infer(f, n), _infer(g, n)
            _expect(tf.cod, tg.dom, "composition", n)
            return MorType(tf.dom, tg.cod)
        case Tensor(f, g):
            tf, tg = _infer(f, n), _infer(g, n)
            return MorType(tf.dom @ tg.dom, tf.cod @ tg.cod)
        case Left(o):
            o.check_range(n)
            return MorType(o, o)
        case Sym(x, y):
            x.check_range(n)
            y.check_range(n)
            return MorType(x @ y, y @ x)
        case Assoc(x, y, z):
            for o in (x, y, z):
                o.check_range(n)
            return MorType(x @ y @ z, x @ y @ z)
        case FR(k, g, h):
            _check_level(k, n, n - 1, "FR")
            tg, th = _infer(g, n), _infer(h, n)
            x, y = tg.dom, tg.cod
            for o, what in ((x, "parameter"), (y, "codomain")):
                if any(j != k for j in o.factors):
                    raise SideConditionError(
                        f"FR_{k}: {what} {o} is not a power of N{k}",
                        level=next(j for j in o.factors if j != k),
                    )
            _expect(th.dom, N(k) @ x, f"FR_{k} step domain", n)
            _expect(th.cod, y, f"FR_{k} step codomain", n)
            return MorType(N(k) @ x, y)
        case SRR(k, g, h) | SDR(k, g, h) | PSRR(k, g, h):
            former = type(t).__name__
            _check_level(k, n, n - 2, former)
            tg, th = _infer(g, n), _infer(h, n)
            x, y = tg.dom, tg.cod
            counter = N(k + 1)
            if isinstance(t, SRR):
                step_dom = y
            elif isinstance(t, SDR):
                step_dom = counter @ x @ y
            else:
                step_dom = x @ y
            _expect(th.dom, step_dom, f"{former}_{k} step domain", n)
            _expect(th.cod, y, f"{former}_{k} step codomain", n)
            _side_condition(k, y, former)
            return MorType(counter @ x, y)
        case RaiseG(k, f):
            _check_level(k, n, n - 2, "G")
            tf = _infer(f, n)
            return MorType(coerce_obj("G", k, tf.dom), coerce_obj("G", k, tf.cod))
        case LowerT(k, f):
            _check_level(k, n, n - 2, "T")
            tf = _infer(f, n)
            return MorType(coerce_obj("T", k, tf.dom), coerce_obj("T", k, tf.cod))
    raise TypingError(f"not a term: {t!r}")


def is_well_typed(t: Term, n: int) -> bool:
    try:
        infer_type(t, n)
    except (TypingError, LevelRangeError):
        return False
    return True


def profile_type(t: Term, n: int) -> tuple:
    """``(dom, cod)`` as ``ObjNF`` profiles."""
    return infer_type(t, n).profile(n)


__all__ = [
    "Term", "Id", "Zero", "Succ", "Eraser", "Dup", "Drop", "Comp", "Tensor",
    "Left", "Sym", "Assoc", "FR", "SRR", "SDR", "PSRR", "RaiseG", "LowerT",
    "MorType", "ObjNF", "infer_type", "is_well_typed", "walk", "size",
    "required_n", "RECURSION_FORMERS",
]
