"""Hypothesis strategies for well-typed terms at n = 4."""

from hypothesis import strategies as st

from ncomp.library import DOUBLE, PLUS, PRED, numeral
from ncomp.objects import N, Obj
from ncomp.terms import Comp, Drop, Dup, Eraser, Id, Succ, Sym, Tensor, infer_type

N_LEVELS = 4

ATOMS = (
    [Succ(j) for j in range(N_LEVELS)]
    + [Id(N(j)) for j in range(N_LEVELS)]
    + [Drop(j) for j in range(N_LEVELS - 1)]
    + [Comp(numeral(j, 2), Eraser(N(j))) for j in range(N_LEVELS)]
    + [Sym(N(1), N(0)), Sym(N(2), N(2)), PLUS, PRED, DOUBLE]
)


def _adapters(cod: Obj) -> list:
    """Arrows out of ``cod`` used to extend a composite."""
    out = [Id(cod), Eraser(cod)]
    if len(cod) <= 2:
        out.append(Dup(cod))
    for pos, j in enumerate(cod.factors):
        for op in (Succ(j), Drop(j - 1) if j else Eraser(N(0))):
            parts = [Id(N(i)) for i in cod.factors]
            parts[pos] = op
            t = parts[0]
            for p in parts[1:]:
                t = Tensor(t, p)
            out.append(t)
    if cod.factors == (1, 0):
        out.append(PLUS)
    if len(cod) == 2:
        out.append(Sym(N(cod.factors[0]), N(cod.factors[1])))
    return out


@st.composite
def terms(draw, depth: int = 3):
    if depth == 0 or draw(st.integers(0, 3)) == 0:
        return draw(st.sampled_from(ATOMS))
    if draw(st.booleans()):
        f = draw(terms(depth - 1))
        g = draw(terms(depth - 1))
        t = Tensor(f, g)
        if len(infer_type(t, N_LEVELS).dom) <= 3:
            return t
        return f
    f = draw(terms(depth - 1))
    g = draw(st.sampled_from(_adapters(infer_type(f, N_LEVELS).cod)))
    return Comp(g, f)


def inputs_for(t, bound: int = 3):
    arity = len(infer_type(t, N_LEVELS).dom)
    return st.tuples(*[st.integers(0, bound) for _ in range(arity)])
