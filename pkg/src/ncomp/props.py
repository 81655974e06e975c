"""Extensional checks of commuting diagrams in the standard model."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import library as lib
from .coerce import G, T, apply_mor, chi_variants, eps_component, eta_component, safe_comp_square
from .errors import StrictnessError, TypingError
from .evaluate import Fuel, compile_term
from .objects import N, Obj, TOP
from .terms import (
    FR, PSRR, SDR, SRR, Comp, Dup, Eraser, Id, Left, Succ, Sym, Tensor, Term, Zero,
    infer_type, required_n,
)

DEFAULT_BOUND = 8
TUPLE_CAP = 10**5
SAMPLE_SEED = 20240229


@dataclass
class DiagramCheck:
    name: str
    lhs: Term
    rhs: Term
    bound: int
    ok: bool
    checked: int
    counterexample: tuple | None = None   # (input, lhs value, rhs value)
    sampled: bool = False
    method: str = "evaluation"            # or "identity laws"

    def __str__(self):
        tag = "pass" if self.ok else "FAIL"
        if self.method != "evaluation":
            return f"{tag}  {self.name}  (sides agree after {self.method})"
        how = "sampled" if self.sampled else "all"
        line = f"{tag}  {self.name}  ({how} {self.checked} inputs <= {self.bound})"
        if not self.ok:
            v, a, b = self.counterexample
            line += f"  at {v}: {a} != {b}"
        return line

    def as_dict(self) -> dict:
        return {
            "law": self.name,
            "bound": self.bound,
            "ok": self.ok,
            "checked": self.checked,
            "sampled": self.sampled,
            "method": self.method,
            "counterexample": None if self.ok else [list(x) for x in self.counterexample],
        }


def input_tuples(arity: int, bound: int, cap: int = TUPLE_CAP) -> tuple:
    """``(iterator, sampled)``: every tuple in ``[0, bound]^arity`` or a seeded sample."""
    total = (bound + 1) ** arity
    if total <= cap:
        return product(range(bound + 1), repeat=arity), False
    rng = random.Random(SAMPLE_SEED)
    sample = (tuple(rng.randint(0, bound) for _ in range(arity)) for _ in range(cap))
    return sample, True


def strip_identities(t: Term) -> Term:
    """Drop identity arrows from compositions and merge tensors of identities.

    Only the unit laws of composition and functoriality of the tensor on
    identities are used, so the result denotes the same function.
    """
    match t:
        case Comp(g, f):
            g, f = strip_identities(g), strip_identities(f)
            if isinstance(g, Id):
                return f
            if isinstance(f, Id):
                return g
            return Comp(g, f)
        case Tensor(f, g):
            f, g = strip_identities(f), strip_identities(g)
            if isinstance(f, Id) and isinstance(g, Id):
                return Id(f.obj @ g.obj)
            return Tensor(f, g)
    return t


def check_equal(lhs: Term, rhs: Term, bound: int = DEFAULT_BOUND, n: int | None = None,
                name: str = "", fuel: int | None = None,
                use_identity_laws: bool = True) -> DiagramCheck:
    """Compare two parallel arrows on every input with entries ``<= bound``.

    When the sides coincide after removing identities the equation holds
    for every input and nothing is evaluated (unless ``use_identity_laws``
    is off).
    """
    n = n or max(required_n(lhs), required_n(rhs))
    fuel_l, fuel_r = Fuel(fuel) if fuel else Fuel(), Fuel(fuel) if fuel else Fuel()
    fl, tl = compile_term(lhs, n, fuel_l)
    fr, tr = compile_term(rhs, n, fuel_r)
    if tl != tr:
        raise TypingError(f"sides have types {tl} and {tr}")
    if use_identity_laws and strip_identities(lhs) == strip_identities(rhs):
        return DiagramCheck(name or "equation", lhs, rhs, bound, True, 0, method="identity laws")
    inputs, sampled = input_tuples(len(tl.dom), bound)
    count = 0
    for v in inputs:
        count += 1
        fuel_l.reset()
        fuel_r.reset()
        a, b = fl(v), fr(v)
        if a != b:
            return DiagramCheck(name or "equation", lhs, rhs, bound, False, count, (v, a, b), sampled)
    return DiagramCheck(name or "equation", lhs, rhs, bound, True, count, None, sampled)


# -- comonoids --------------------------------------------------------------------------

def comonoid_laws(x: Obj) -> list:
    """``(name, lhs, rhs)`` for counit, coassociativity and cocommutativity at ``x``."""
    i, d, e = Id(x), Dup(x), Eraser(x)
    return [
        (f"right counit at {x}", Comp(lib.right_unitor(x), Comp(Tensor(i, e), d)), i),
        (f"left counit at {x}", Comp(Left(x), Comp(Tensor(e, i), d)), i),
        (f"coassociativity at {x}", Comp(Tensor(d, i), d), Comp(Tensor(i, d), d)),
        (f"cocommutativity at {x}", Comp(Sym(x, x), d), d),
    ]


def comonoid_suite(k: int, bound: int = DEFAULT_BOUND, n: int = 4) -> list:
    out = [check_equal(l, r, bound, n, name) for name, l, r in comonoid_laws(N(k))]
    out.append(check_equal(Eraser(TOP), Id(TOP), bound, n, "eraser at the unit"))
    return out


def comonoid_morphism_check(f: Term, bound: int = DEFAULT_BOUND, n: int | None = None) -> list:
    n = n or required_n(f)
    ty = infer_type(f, n)
    x, y = ty.dom, ty.cod
    return [
        check_equal(Comp(Dup(y), f), Comp(Tensor(f, f), Dup(x)), bound, n, "duplication square"),
        check_equal(Comp(Eraser(y), f), Eraser(x), bound, n, "eraser triangle"),
    ]


# -- cartesian structure ----------------------------------------------------------------

def _endos(x: Obj) -> list:
    """A few arrows ``x -> x``: identity, a successor on each factor, a constant factor."""
    out = [Id(x)]
    for pos, j in enumerate(x.factors):
        for op in (Succ(j), Comp(Zero(j), Eraser(N(j)))):
            parts = [Id(N(i)) for i in x.factors]
            parts[pos] = op
            out.append(lib.tensor_all(parts))
    return out


def _arrows(dom: Obj, cod: Obj, pieces: tuple) -> list:
    """Sampled arrows ``dom -> cod``; ``pieces`` is ``(X, Y)`` when ``dom = X * Y``."""
    out = []
    consts = lib.tensor_all([lib.numeral(j, 2) for j in cod.factors]) if cod.factors else Id(TOP)
    out.append(Comp(consts, Eraser(dom)))
    if dom == cod:
        out += _endos(cod)
    if pieces:
        x, y = pieces
        if cod == x:
            out += [Comp(e, lib.proj1(x, y)) for e in _endos(x)]
        if cod == y:
            out += [Comp(e, lib.proj2(x, y)) for e in _endos(y)]
    return out


def cartesian_suite(x: Obj, y: Obj, bound: int = DEFAULT_BOUND, n: int = 4,
                    limit: int = 6) -> list:
    """Projection, pairing and comonoid-product laws for sampled ``f: C -> X``, ``g: C -> Y``."""
    xy = x @ y
    p1, p2 = lib.proj1(x, y), lib.proj2(x, y)
    out = [check_equal(lib.pair(p1, p2, n), Id(xy), bound, n, f"surjective pairing at {xy}")]
    for c, pieces in ((x, ()), (xy, (x, y))):
        fs = _arrows(c, x, pieces)[:limit]
        gs = _arrows(c, y, pieces)[:limit]
        for i, f in enumerate(fs):
            for j, g in enumerate(gs):
                tag = f"C={c}, f#{i}, g#{j}"
                pg = lib.pair(f, g, n)
                out.append(check_equal(Comp(p1, pg), f, bound, n, f"first projection ({tag})"))
                out.append(check_equal(Comp(p2, pg), g, bound, n, f"second projection ({tag})"))
                out += _transmono_squares(f, g, bound, n, tag)
    return out


def _transmono_squares(f1: Term, f2: Term, bound: int, n: int, tag: str) -> list:
    """Squares (1) and (2) of the argument that counit laws force products."""
    ty1, ty2 = infer_type(f1, n), infer_type(f2, n)
    d, c1, c2 = ty1.dom, ty1.cod, ty2.cod
    erase2 = Comp(lib.right_unitor(c1), Tensor(Id(c1), Eraser(c2)))
    erase1 = Comp(lib.right_unitor(c1), Tensor(Id(c1), Eraser(c1)))
    return [
        check_equal(Comp(Tensor(f1, f1), Dup(d)), Comp(Dup(c1), f1), bound, n,
                    f"duplication natural ({tag})"),
        check_equal(Comp(erase2, Tensor(f1, f2)), Comp(erase1, Tensor(f1, f1)), bound, n,
                    f"erasing the second factor ({tag})"),
    ]


# -- derived structure ------------------------------------------------------------------

def derived_eraser(j: int) -> Term:
    """Eraser of ``N_j`` from recursion: ``eta_0`` for ``j = 0``, else an SRR into the unit."""
    if j == 0:
        return eta_component(0, N(0))
    return SRR(j - 1, Id(TOP), Id(TOP))


def derived_duplication(j: int) -> Term:
    """``G_{j-1}`` of the SRR that counts up on both factors of ``N_{j-1}^2``."""
    if j == 0:
        raise ValueError("N_0 has no derived duplication")
    k = j - 1
    f = SRR(k, Tensor(Zero(k), Zero(k)), Tensor(Succ(k), Succ(k)))
    return apply_mor(G(k), f)


def derived_structure_suite(bound: int = DEFAULT_BOUND, n: int = 4) -> list:
    out = [check_equal(Id(TOP), Eraser(TOP), bound, n, "derived eraser at the unit")]
    out.append(check_equal(derived_eraser(0), Eraser(N(0)), bound, n, "derived eraser at N0"))
    for k in range(n - 1):
        j = k + 1
        out.append(check_equal(derived_eraser(j), Eraser(N(j)), bound, n, f"derived eraser at N{j}"))
        out.append(check_equal(derived_duplication(j), Dup(N(j)), bound, n,
                               f"derived duplication at N{j}"))
    return out


# -- recursion diagrams ---------------------------------------------------------------------

def recursion_diagrams(t: Term, bound: int = DEFAULT_BOUND, n: int | None = None) -> list:
    """Base and step equations of a recursion node, instantiated with its own parts."""
    n = n or required_n(t)
    ty = infer_type(t, n)
    k, g, h = t.k, t.base, t.step
    x = infer_type(g, n).dom
    c = k if isinstance(t, FR) else k + 1
    cx = N(c) @ x
    name = type(t).__name__
    base = check_equal(Comp(t, Tensor(Zero(c), Id(x))), Comp(g, Left(x)), bound, n, f"{name} base")
    lhs = Comp(t, Tensor(Succ(c), Id(x)))
    if isinstance(t, FR):
        rhs = h
    elif isinstance(t, SRR):
        rhs = Comp(h, t)
    elif isinstance(t, SDR):
        rhs = Comp(h, Comp(Tensor(Id(cx), t), Dup(cx)))
    elif isinstance(t, PSRR):
        rhs = Comp(h, Comp(Tensor(lib.proj2(N(c), x), t), Dup(cx)))
    else:
        raise TypingError(f"{t!r} is not a recursion node")
    assert infer_type(lhs, n).cod == ty.cod
    return [base, check_equal(lhs, rhs, bound, n, f"{name} step")]


# -- coercion laws ------------------------------------------------------------------------

def chi_suite(bound: int = 10, n: int = 4) -> list:
    out = []
    for k in range(n - 1):
        for j in range(n):
            c, te, ge = chi_variants(k, N(j))
            out.append(check_equal(te, c, bound, n, f"T{k} eps = chi{k} at N{j}",
                                   use_identity_laws=False))
            out.append(check_equal(ge, c, bound, n, f"G{k} eta = chi{k} at N{j}",
                                   use_identity_laws=False))
    return out


def naturality_suite(terms: Iterable[Term], bound: int = 4, n: int = 4) -> list:
    """``eps Y . G f = f . eps X`` and ``T f . eta X = eta Y . f`` where ``T f`` exists."""
    out = []
    for f in terms:
        ty = infer_type(f, n)
        for k in range(n - 1):
            gf = apply_mor(G(k), f)
            out.append(check_equal(Comp(eps_component(k, ty.cod), gf),
                                   Comp(f, eps_component(k, ty.dom)), bound, n,
                                   f"eps{k} natural at {f}"))
            try:
                tf = apply_mor(T(k), f)
            except (TypingError, StrictnessError):
                continue
            out.append(check_equal(Comp(tf, eta_component(k, ty.dom)),
                                   Comp(eta_component(k, ty.cod), f), bound, n,
                                   f"eta{k} natural at {f}"))
    return out


def square_suite(bound: int = 6, n: int = 4) -> list:
    out = []
    for name, f in lib.stdlib().items():
        if required_n(f) > n:
            continue
        cod = infer_type(f, n).cod
        m = cod.factors[0]
        for k in range(0, min(m, n - 1)):
            p1, p2 = safe_comp_square(f, k, n)
            out.append(check_equal(p1, p2, bound, n, f"safe composition square for {name}, k={k}"))
    return out


def _recursion_nodes(n: int) -> list:
    """``(node, bound)``; the bound keeps the step side within default fuel."""
    nodes = [
        (lib.PLUS, 8), (lib.TIMES, 6), (lib.EXP, 4), (lib.TETRA, 2), (lib.PRED, 8),
        (lib.elaborate_psrr(lib.TIMES), 6), (lib.elaborate_psrr(lib.EXP), 4),
    ]
    return [(t, b) for t, b in nodes if required_n(t) <= n]


SUITES: dict = {
    "comonoid": lambda b, n: [c for k in range(n) for c in comonoid_suite(k, b, n)],
    "cartesian": lambda b, n: (
        cartesian_suite(N(1), N(1), b, n) + cartesian_suite(N(0), N(1), b, n)
    ),
    "derived": lambda b, n: derived_structure_suite(b, n),
    "morphisms": lambda b, n: [
        c for f in (Succ(1), Id(N(1)), Comp(Zero(0), Eraser(N(2))), lib.DOUBLE, lib.PLUS)
        for c in comonoid_morphism_check(f, b, n)
    ],
    "recursion": lambda b, n: [
        c for t, cap in _recursion_nodes(n) for c in recursion_diagrams(t, min(b, cap), n)
    ],
    "chi": lambda b, n: chi_suite(b, n),
    "naturality": lambda b, n: naturality_suite(
        [Succ(1), Zero(0), lib.DOUBLE, lib.PLUS, lib.PRED, Sym(N(0), N(1))], min(b, 4), n
    ),
    "squares": lambda b, n: square_suite(min(b, 6), n),
}


def run_suite(name: str, bound: int = DEFAULT_BOUND, n: int = 4) -> list:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key](bound, n)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    return SUITES[name](bound, n)
