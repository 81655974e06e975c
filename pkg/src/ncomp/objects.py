"""Objects of the calculus: tensors of level objects ``N_j`` and the unit.

Two representations are used.  ``Obj`` is an ordered sequence of factor
levels: associativity and the unit are strict (nesting and ``top``
factors disappear) but symmetry is not, so positions line up with value
tuples.  ``ObjNF`` is the exponent profile ``(a_0, ..., a_{n-1})`` and
identifies objects modulo associativity *and* symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import LevelRangeError


@dataclass(frozen=True)
class Obj:
    factors: tuple = ()

    def __post_init__(self):
        factors = tuple(int(j) for j in self.factors)
        if any(j < 0 for j in factors):
            raise LevelRangeError(f"negative level in {factors}")
        object.__setattr__(self, "factors", factors)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __matmul__(self, other: "Obj") -> "Obj":
        return Obj(self.factors + other.factors)

    @property
    def is_top(self) -> bool:
        return not self.factors

    @property
    def max_level(self) -> int:
        return max(self.factors, default=-1)

    def normal_form(self, n: int) -> "ObjNF":
        alphas = [0] * n
        for j in self.factors:
            if j >= n:
                raise LevelRangeError(f"level {j} does not exist for n={n}")
            alphas[j] += 1
        return ObjNF(n, tuple(alphas))

    def check_range(self, n: int) -> None:
        for j in self.factors:
            if j >= n:
                raise LevelRangeError(f"level {j} does not exist for n={n}")

    def __str__(self):
        return " * ".join(f"N{j}" for j in self.factors) if self.factors else "T"


TOP = Obj(())


def N(k: int) -> Obj:
    return Obj((k,))


def power(k: int, alpha: int) -> Obj:
    return Obj((k,) * alpha)


def tensor(*objs: Obj) -> Obj:
    out = ()
    for o in objs:
        out += o.factors
    return Obj(out)


@dataclass(frozen=True)
class ObjNF:
    n: int
    alphas: tuple

    def __post_init__(self):
        alphas = tuple(self.alphas)
        if len(alphas) != self.n:
            raise ValueError(f"profile {alphas} does not have length {self.n}")
        if any(a < 0 for a in alphas):
            raise ValueError(f"negative exponent in {alphas}")
        object.__setattr__(self, "alphas", alphas)

    @classmethod
    def top(cls, n: int) -> "ObjNF":
        return cls(n, (0,) * n)

    def __add__(self, other: "ObjNF") -> "ObjNF":
        if self.n != other.n:
            raise ValueError("profiles over different chains")
        return ObjNF(self.n, tuple(a + b for a, b in zip(self.alphas, other.alphas)))

    @property
    def is_top(self) -> bool:
        return not any(self.alphas)

    @property
    def levelcap(self) -> int:
        """Highest level with a nonzero exponent; -1 for the unit."""
        nz = [j for j, a in enumerate(self.alphas) if a]
        return nz[-1] if nz else -1

    def to_obj(self) -> Obj:
        """Canonical ordering: descending level."""
        out = ()
        for j in reversed(range(self.n)):
            out += (j,) * self.alphas[j]
        return Obj(out)

    def __str__(self):
        return "(" + ",".join(map(str, self.alphas)) + ")"


def normalize_object(expr, n: int) -> ObjNF:
    """Profile of a raw object tree.

    A tree is an ``Obj``, an ``ObjNF``, the string ``"top"``, a pair
    ``("N", k)``, or any list/tuple of trees (read as their tensor).
    """
    return _flatten(expr, n).normal_form(n)


def _flatten(expr, n: int) -> Obj:
    if isinstance(expr, Obj):
        expr.check_range(n)
        return expr
    if isinstance(expr, ObjNF):
        return expr.to_obj()
    if expr == "top" or expr == "T":
        return TOP
    if isinstance(expr, tuple) and len(expr) == 2 and expr[0] == "N":
        k = int(expr[1])
        if not 0 <= k < n:
            raise LevelRangeError(f"level {k} does not exist for n={n}")
        return N(k)
    if isinstance(expr, (list, tuple)):
        return tensor(*(_flatten(e, n) for e in expr))
    raise ValueError(f"not an object expression: {expr!r}")


# -- coercions acting on levels ------------------------------------------------

def coerce_level(kind: str, k: int, j: int) -> Optional[int]:
    """Image of ``N_j`` under ``T_k`` or ``G_k``; ``None`` stands for the unit."""
    if kind == "T":
        if j == k:
            return None if k == 0 else k - 1
        return j
    if kind == "G":
        return k + 1 if j == k else j
    raise ValueError(f"unknown coercion kind {kind!r}")


def coerce_obj(kind: str, k: int, obj: Obj) -> Obj:
    out = []
    for j in obj.factors:
        img = coerce_level(kind, k, j)
        if img is not None:
            out.append(img)
    return Obj(tuple(out))


def coerce_string(steps: Iterable, obj: Obj) -> Obj:
    """Apply ``(kind, k)`` steps in the order given."""
    for kind, k in steps:
        obj = coerce_obj(kind, k, obj)
    return obj


def lowering_steps(k: int) -> list:
    """Application order for the string ``T_k ... T_0``: ``T_k`` acts first."""
    return [("T", i) for i in range(k, -1, -1)]


def is_level_bounded(obj: Obj, k: int) -> bool:
    """``T_k ... T_0 obj`` is the unit."""
    return coerce_string(lowering_steps(k), obj).is_top
