"""Standard model: terms denote functions on tuples of naturals.

A value of ``N_{j1} * ... * N_{jr}`` is an ``r``-tuple of Python ints
laid out along the object's factor sequence.  Levels are type
information only; drops and raised arrows do not touch the numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Sequence

from .coerce import T, apply_mor, apply_word, bar, bar_steps, chi
from .errors import FuelExhausted, ShapeError, TypingError
from .objects import Obj, ObjNF
from .terms import (
    FR, PSRR, SDR, SRR, Assoc, Comp, Drop, Dup, Eraser, Id, Left, LowerT,
    RaiseG, Succ, Sym, Tensor, Term, Zero, infer_type, required_n, size,
)

DEFAULT_FUEL = 10**7


class Fuel:
    """Budget of recursion unfoldings shared by one evaluation."""

    def __init__(self, limit: int = DEFAULT_FUEL):
        if limit <= 0:
            raise ValueError("fuel must be positive")
        self.limit = limit
        self.used = 0

    def reset(self) -> None:
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise FuelExhausted(self.limit)


@dataclass(frozen=True)
class LevelTuple:
    shape: Obj
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != len(self.shape):
            raise ShapeError(f"{len(entries)} value(s) for shape {self.shape}")
        if any(v < 0 for v in entries):
            raise ShapeError("values are natural numbers")
        object.__setattr__(self, "entries", entries)

    def __str__(self):
        return " ".join(map(str, self.entries))


Fn = Callable[[tuple], tuple]


def compile_term(t: Term, n: int | None = None, fuel: Fuel | None = None) -> tuple:
    """Type-check ``t`` and return ``(function, type)``."""
    n = n or required_n(t)
    ty = infer_type(t, n)
    fuel = fuel or Fuel()
    return _compile(t, n, fuel), ty


def denote(t: Term, args: Sequence[int] | LevelTuple = (), n: int | None = None,
           fuel: Fuel | int | None = None) -> tuple:
    n = n or required_n(t)
    if isinstance(fuel, int):
        fuel = Fuel(fuel)
    fn, ty = compile_term(t, n, fuel)
    if isinstance(args, LevelTuple):
        if args.shape != ty.dom:
            raise ShapeError(f"argument shape {args.shape} does not match {ty.dom}")
        args = args.entries
    args = tuple(int(a) for a in args)
    if len(args) != len(ty.dom):
        raise ShapeError(f"{t} takes {len(ty.dom)} argument(s), got {len(args)}")
    if any(a < 0 for a in args):
        raise ShapeError("arguments are natural numbers")
    return fn(args)


def evaluate(t: Term, v: LevelTuple, n: int | None = None, fuel: Fuel | int | None = None) -> LevelTuple:
    n = n or required_n(t)
    out = denote(t, v, n, fuel)
    return LevelTuple(infer_type(t, n).cod, out)


def _arity(t: Term, n: int) -> int:
    return len(infer_type(t, n).dom)


def _compile(t: Term, n: int, fuel: Fuel) -> Fn:
    match t:
        case Id() | Left() | Assoc() | Drop():
            return _identity
        case Zero():
            return lambda v: (0,)
        case Succ():
            return lambda v: (v[0] + 1,)
        case Eraser():
            return lambda v: ()
        case Dup():
            return lambda v: v + v
        case Sym(x, _):
            a = len(x)
            return lambda v: v[a:] + v[:a]
        case Comp(g, f):
            fg, ff = _compile(g, n, fuel), _compile(f, n, fuel)
            return lambda v: fg(ff(v))
        case Tensor(f, g):
            a = _arity(f, n)
            ff, fg = _compile(f, n, fuel), _compile(g, n, fuel)
            return lambda v: ff(v[:a]) + fg(v[a:])
        case RaiseG(_, f):
            return _compile(f, n, fuel)
        case LowerT(k, f):
            return _compile(apply_mor(T(k), f), n, fuel)
        case FR(_, g, h):
            fg, fh = _compile(g, n, fuel), _compile(h, n, fuel)

            def flat(v):
                m, u = v[0], v[1:]
                if m == 0:
                    return fg(u)
                fuel.spend()
                return fh((m - 1,) + u)
            return flat
        case SRR(_, g, h):
            fg, fh = _compile(g, n, fuel), _compile(h, n, fuel)

            def ramified(v):
                acc = fg(v[1:])
                for _ in range(v[0]):
                    fuel.spend()
                    acc = fh(acc)
                return acc
            return ramified
        case SDR(_, g, h):
            fg, fh = _compile(g, n, fuel), _compile(h, n, fuel)

            def dependent(v):
                x = v[1:]
                acc = fg(x)
                for i in range(v[0]):
                    fuel.spend()
                    acc = fh((i,) + x + acc)
                return acc
            return dependent
        case PSRR(_, g, h):
            fg, fh = _compile(g, n, fuel), _compile(h, n, fuel)

            def parameterized(v):
                x = v[1:]
                acc = fg(x)
                for _ in range(v[0]):
                    fuel.spend()
                    acc = fh(x + acc)
                return acc
            return parameterized
    raise TypingError(f"cannot evaluate {t!r}")


def _identity(v):
    return v


# -- closed points ---------------------------------------------------------------------
#
# The normalizer below works on numeral *terms* (s_k . ... . s_k . 0_k) and
# unfolds recursion by peeling successors off the counter term.  It shares
# no arithmetic with ``denote``.

def _is_zero(t: Term) -> bool:
    return isinstance(t, Zero)


def _pred(t: Term) -> Term:
    assert isinstance(t, Comp) and isinstance(t.outer, Succ)
    return t.inner


def _relevel(t: Term, k: int) -> Term:
    # d_k s_{k+1} p = s_k d_k p and d_k 0_{k+1} = 0_k, applied all the way down
    depth = 0
    while not _is_zero(t):
        t = _pred(t)
        depth += 1
    out: Term = Zero(k)
    for _ in range(depth):
        out = Comp(Succ(k), out)
    return out


def _count(t: Term) -> int:
    m = 0
    while not _is_zero(t):
        t = _pred(t)
        m += 1
    return m


def _reduce(t: Term, args: list, n: int, fuel: Fuel) -> list:
    """Rewrite ``t`` applied to numeral terms into numeral terms."""
    match t:
        case Id() | Left() | Assoc():
            return args
        case RaiseG(_, f):
            return _reduce(f, args, n, fuel)
        case LowerT(k, f):
            return _reduce(apply_mor(T(k), f), args, n, fuel)
        case Zero(k):
            return [Zero(k)]
        case Succ(k):
            return [Comp(Succ(k), args[0])]
        case Drop(k):
            return [_relevel(args[0], k)]
        case Eraser():
            return []
        case Dup():
            return args + args
        case Sym(x, _):
            a = len(x)
            return args[a:] + args[:a]
        case Comp(g, f):
            return _reduce(g, _reduce(f, args, n, fuel), n, fuel)
        case Tensor(f, g):
            a = _arity(f, n)
            return _reduce(f, args[:a], n, fuel) + _reduce(g, args[a:], n, fuel)
        case FR(_, g, h):
            m, u = args[0], args[1:]
            if _is_zero(m):
                return _reduce(g, u, n, fuel)
            fuel.spend()
            return _reduce(h, [_pred(m)] + u, n, fuel)
        case SRR(_, g, h) | SDR(_, g, h) | PSRR(_, g, h):
            m, x = args[0], args[1:]
            if _is_zero(m):
                return _reduce(g, x, n, fuel)
            fuel.spend()
            p = _pred(m)
            prev = _reduce(t, [p] + x, n, fuel)
            if isinstance(t, SRR):
                return _reduce(h, prev, n, fuel)
            if isinstance(t, SDR):
                return _reduce(h, [p] + x + prev, n, fuel)
            return _reduce(h, x + prev, n, fuel)
    raise TypingError(f"cannot reduce {t!r}")


def normal_point(t: Term, n: int | None = None, fuel: Fuel | int | None = None) -> Term:
    """Rewrite a closed point ``T -> N_k`` to the numeral ``s_k^m 0_k``."""
    n = n or required_n(t)
    ty = infer_type(t, n)
    if not ty.dom.is_top or len(ty.cod) != 1:
        raise ShapeError(f"{t} is not a closed point of a single level object")
    if isinstance(fuel, int) or fuel is None:
        fuel = Fuel(fuel or DEFAULT_FUEL)
    (out,) = _reduce(t, [], n, fuel)
    return out


def normalize_point(t: Term, n: int | None = None, fuel: Fuel | int | None = None) -> int:
    """Index ``m`` of the numeral a closed point rewrites to."""
    return _count(normal_point(t, n, fuel))


def point_level(t: Term, n: int | None = None) -> int:
    return infer_type(t, n or required_n(t)).cod.factors[0]


# -- the chain-valued model ------------------------------------------------------------

@dataclass
class GammaChain:
    """Observable part of ``Gamma_n X``: objects and connecting arrows."""

    objects: list               # ObjNF per position
    labels: list                # "1" or "N" per position (tensor powers joined by *)
    maps: list = field(default_factory=list)   # connecting terms, n - 1 of them

    def __str__(self):
        return " -> ".join(self.labels)


def _label(x: ObjNF) -> str:
    if x.is_top:
        return "1"
    parts = []
    for j, a in enumerate(x.alphas):
        parts += [f"N{j}"] * a
    return "*".join(parts)


def gamma_object(x: ObjNF) -> GammaChain:
    n = x.n
    objs = [bar(k, x) for k in range(n)]
    maps = [apply_word(bar_steps(k, n), chi(k, x.to_obj())) for k in range(n - 1)]
    for k, m in enumerate(maps):
        ty = infer_type(m, n)
        if ty.dom.normal_form(n) != objs[k] or ty.cod.normal_form(n) != objs[k + 1]:
            raise TypingError(f"rung {k} of Gamma({x}) has type {ty}")
    return GammaChain(objs, [_label(o) for o in objs], maps)


@dataclass
class LadderReport:
    ok: bool
    rungs_checked: int
    counterexample: tuple | None = None   # (rung, input, path1 value, path2 value)

    def __str__(self):
        if self.ok:
            return f"all {self.rungs_checked} squares commute"
        return f"square {self.counterexample[0]} fails at {self.counterexample[1]}"


def gamma_morphism_ladder(f: Term, bound: int, n: int | None = None) -> LadderReport:
    """Check the squares ``(k+1)bar f . kbar chi_k X = kbar chi_k Y . kbar f``."""
    n = n or required_n(f)
    ty = infer_type(f, n)
    if len(ty.dom) != 1 or len(ty.cod) != 1:
        raise ShapeError("ladders are built for single-factor endpoints")
    rungs = 0
    for k in range(n - 1):
        top = apply_word(bar_steps(k, n), f)
        bottom = apply_word(bar_steps(k + 1, n), f)
        left = apply_word(bar_steps(k, n), chi(k, ty.dom))
        right = apply_word(bar_steps(k, n), chi(k, ty.cod))
        p1, p2 = Comp(bottom, left), Comp(right, top)
        infer_type(p1, n)
        infer_type(p2, n)
        for v in _inputs(len(infer_type(p1, n).dom), bound):
            a, b = denote(p1, v, n), denote(p2, v, n)
            if a != b:
                return LadderReport(False, rungs, (k, v, a, b))
        rungs += 1
    return LadderReport(True, rungs)


def _inputs(arity: int, bound: int) -> Iterator[tuple]:
    return product(range(bound + 1), repeat=arity)


# -- closed point enumeration -------------------------------------------------------------
#
# Grammar (left argument of every Comp is not itself a Comp, so each
# tree is produced once):
#   P_k ::= 0_k | u . P_k | d_k . P_{k+1} | R . P_{j+1} | plus . (P_1 * P_0)
# with u in {s_k, pred_k} and R = SRR_j(g, u) or PSRR_j(g, u) for a
# closed point g of N_k and k <= j.

def _unaries(k: int) -> list:
    return [Succ(k), FR(k, Zero(k), Id(Obj((k,))))]


def enumerate_closed_points(n: int, max_size: int) -> dict:
    """All grammar points of size ``<= max_size``, keyed by level."""
    plus = SRR(0, Id(Obj((0,))), Succ(0))
    by: dict = {(k, s): [] for k in range(n) for s in range(max_size + 1)}

    def add(k, t):
        s = size(t)
        if s <= max_size:
            by[(k, s)].append(t)

    for s in range(1, max_size + 1):
        for k in range(n):
            if s == 1:
                add(k, Zero(k))
                continue
            for u in _unaries(k):
                for p in by.get((k, s - 1 - size(u)), ()):
                    add(k, Comp(u, p))
            if k + 1 < n:
                for p in by.get((k + 1, s - 2), ()):
                    add(k, Comp(Drop(k), p))
            for j in range(k, n - 1):
                for u in _unaries(k):
                    for sg in range(1, s):
                        rest = s - 2 - size(u) - sg
                        if rest < 1:
                            continue
                        for g in by[(k, sg)]:
                            for former in (SRR, PSRR):
                                for p in by.get((j + 1, rest), ()):
                                    add(k, Comp(former(j, g, u), p))
            if k == 0:
                for s1 in range(1, s - 5):
                    for a in by[(1, s1)]:
                        for b in by.get((0, s - 5 - s1), ()):
                            add(0, Comp(plus, Tensor(a, b)))
    out: dict = {k: [] for k in range(n)}
    for (k, _), ts in sorted(by.items()):
        out[k].extend(ts)
    return out
