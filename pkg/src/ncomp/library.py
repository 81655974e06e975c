"""Derived combinators, the hyperoperation terms and static analyses."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Sequence

from .errors import CompositionError, LevelRangeError
from .objects import N, Obj, TOP
from .terms import (
    FR, PSRR, SDR, SRR, Comp, Drop, Dup, Eraser, Id, Left, LowerT, Succ, Sym,
    Tensor, Term, Zero, RaiseG, infer_type, required_n, walk,
)


# -- structural combinators --------------------------------------------------------

def right_unitor(x: Obj) -> Term:
    """``r = l . sigma : X * T -> X``."""
    return Comp(Left(x), Sym(x, TOP))


def proj1(x: Obj, y: Obj) -> Term:
    return Comp(right_unitor(x), Tensor(Id(x), Eraser(y)))


def proj2(x: Obj, y: Obj) -> Term:
    return Comp(Left(y), Tensor(Eraser(x), Id(y)))


def pair(f: Term, g: Term, n: int) -> Term:
    """``(f * g) . delta``; both arrows must share a domain."""
    tf, tg = infer_type(f, n), infer_type(g, n)
    if tf.dom != tg.dom:
        raise CompositionError(f"pair: domains {tf.dom} and {tg.dom} differ")
    return Comp(Tensor(f, g), Dup(tf.dom))


def numeral(k: int, m: int) -> Term:
    """``s_k^m . 0_k``."""
    t: Term = Zero(k)
    for _ in range(m):
        t = Comp(Succ(k), t)
    return t


def const(k: int, m: int, x: Obj = TOP) -> Term:
    return Comp(numeral(k, m), Eraser(x))


def drop_chain(src: int, dst: int) -> Term:
    """``N_src -> N_dst`` for ``dst <= src`` built from drops."""
    if dst > src:
        raise LevelRangeError(f"cannot drop from N{src} up to N{dst}")
    if dst == src:
        return Id(N(src))
    t: Term = Drop(src - 1)
    for j in range(src - 2, dst - 1, -1):
        t = Comp(Drop(j), t)
    return t


def tensor_all(parts: Sequence[Term]) -> Term:
    if not parts:
        return Id(TOP)
    return reduce(Tensor, parts)


def permute(x: Obj, order: Sequence[int]) -> Term:
    """Arrow ``X -> X'`` with ``X'[i] = X[order[i]]``, built from swaps."""
    if sorted(order) != list(range(len(x))):
        raise ValueError(f"{order} is not a permutation of {len(x)} factors")
    cur = list(range(len(x)))
    levels = list(x.factors)
    t: Term = Id(x)
    # bubble sort towards the target order; each swap is an adjacent sym
    target_pos = {v: i for i, v in enumerate(order)}
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if target_pos[cur[i]] > target_pos[cur[i + 1]]:
                pre = Obj(tuple(levels[:i]))
                post = Obj(tuple(levels[i + 2:]))
                swap = Sym(N(levels[i]), N(levels[i + 1]))
                t = Comp(Tensor(Tensor(Id(pre), swap), Id(post)), t)
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                levels[i], levels[i + 1] = levels[i + 1], levels[i]
                changed = True
    return t


# -- the hyperoperation sequence -----------------------------------------------------

PLUS = SRR(0, Id(N(0)), Succ(0))
TIMES = PSRR(0, Comp(Zero(0), Eraser(N(1))), PLUS)
EXP = PSRR(1, const(1, 1, N(1)), RaiseG(0, TIMES))
TETRA = PSRR(2, Drop(1), EXP)
PRED = FR(0, Zero(0), Id(N(0)))
DOUBLE = Comp(PLUS, Comp(Tensor(Id(N(1)), Drop(0)), Dup(N(1))))


def stdlib() -> dict:
    """Named terms; types given for ``n = 4``."""
    return {
        "plus": PLUS,     # N1 * N0 -> N0
        "times": TIMES,   # N1 * N1 -> N0
        "exp": EXP,       # N2 * N1 -> N1,  exp(x, y) = y ** x
        "tetra": TETRA,   # N3 * N2 -> N1
        "pred": PRED,     # N0 -> N0
        "double": DOUBLE, # N1 -> N0
    }


def elaborate_psrr(t: PSRR) -> SDR:
    """The same function as an SDR node whose step ignores the counter."""
    n = required_n(t)
    infer_type(t, n)
    k, g, h = t.k, t.base, t.step
    tg = infer_type(g, n)
    rest = tg.dom @ tg.cod
    forget = Comp(Left(rest), Tensor(Eraser(N(k + 1)), Id(rest)))
    return SDR(k, g, Comp(h, forget))


# -- species ---------------------------------------------------------------------

@dataclass(frozen=True)
class SpeciesSig:
    arg_species: tuple     # descending, one entry per argument
    out_level: int

    @property
    def arg_counts(self) -> dict:
        counts: dict = {}
        for s in self.arg_species:
            counts[s] = counts.get(s, 0) + 1
        return counts

    def __str__(self):
        return f"({','.join(map(str, self.arg_species))};{self.out_level})"


def level_of(obj: Obj) -> int:
    return max(obj.factors, default=0)


def species_signature(t: Term, n: int | None = None) -> SpeciesSig:
    ty = infer_type(t, n or required_n(t))
    return SpeciesSig(tuple(sorted(ty.dom.factors, reverse=True)), level_of(ty.cod))


def validate_safe_composition(
    h: Term, rs: Mapping[int, Sequence[Term]], n: int | None = None
) -> bool:
    """Check the level discipline of ``h(r_n(..); ...; r_0(..))``.

    ``rs[i]`` lists the arrows feeding the species-``i`` arguments of
    ``h``; their codomains, concatenated, must be exactly those
    arguments.  Safe iff every arrow in block ``i`` has level ``<= i``.
    """
    n = n or required_n(h)
    dom = infer_type(h, n).dom
    ok = True
    species = set(dom.factors) | set(rs)
    for i in species:
        wanted = [j for j in dom.factors if j == i]
        block = list(rs.get(i, ()))
        cods = []
        for r in block:
            cod = infer_type(r, n).cod
            cods.extend(cod.factors)
            if level_of(cod) > i:
                ok = False
        if len(cods) != len(wanted):
            raise CompositionError(
                f"species {i}: h takes {len(wanted)} argument(s), block yields {len(cods)}"
            )
    return ok


def promote_variable(h: Term, level: int, ordinal: int, target: int, n: int | None = None) -> Term:
    """Retype the ``ordinal``-th ``N_level`` argument of ``h`` as ``N_target``."""
    if target <= level:
        raise ValueError(f"target species {target} must exceed {level}")
    n = n or max(required_n(h), target + 1)
    if target > n - 1:
        raise LevelRangeError(f"species {target} does not exist for n={n}")
    dom = infer_type(h, n).dom
    positions = [i for i, j in enumerate(dom.factors) if j == level]
    if ordinal >= len(positions):
        raise ValueError(f"h has only {len(positions)} argument(s) of species {level}")
    pos = positions[ordinal]
    parts = [Id(N(j)) for j in dom.factors]
    parts[pos] = drop_chain(target, level)
    return Comp(h, tensor_all(parts))


def strict_check(t: Term) -> bool:
    """No lowering coercion occurs anywhere in ``t``."""
    return not any(isinstance(s, LowerT) for s in walk(t))
