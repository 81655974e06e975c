"""The finite chain category **n**, its endofunctor monoid and 2-cells.

Endofunctors of **n** are monotone maps of ``{0, ..., n-1}``, stored
extensionally as image sequences.  The monoid product follows the
opposite-composition convention: ``product(f, g)`` is ``g . f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterator, Optional

from .errors import ArityError, LevelRangeError


@dataclass(frozen=True)
class MonotoneMap:
    images: tuple
    # generator word this map was first reached by; debugging aid only
    word: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise LevelRangeError("a chain needs at least one object")
        for a, b in zip(images, images[1:]):
            if a > b:
                raise ValueError(f"not monotone: {images}")
        if images[0] < 0 or images[-1] >= n:
            raise LevelRangeError(f"images out of range for n={n}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __le__(self, other: "MonotoneMap") -> bool:
        _check_same_n(self, other)
        return all(a <= b for a, b in zip(self.images, other.images))

    def __str__(self):
        label = "".join(self.word) if self.word else ""
        return f"[{','.join(map(str, self.images))}]{label and ' ' + label}"


def _check_same_n(f, g):
    if f.n != g.n:
        raise ArityError(f"maps on chains of length {f.n} and {g.n}")


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(tuple(range(n)), word=("id",))


def make_coercion(kind: str, k: int, n: int) -> MonotoneMap:
    """Return the generator ``T_k`` (kind ``"T"``) or ``G_k`` (kind ``"G"``)."""
    if n < 2:
        raise LevelRangeError("coercions need n >= 2")
    if not 0 <= k <= n - 2:
        raise LevelRangeError(f"coercion index {k} outside 0..{n - 2}")
    if kind == "T":
        images = tuple(k + 1 if j == k else j for j in range(n))
    elif kind == "G":
        images = tuple(k if j == k + 1 else j for j in range(n))
    else:
        raise ValueError(f"unknown coercion kind {kind!r}")
    return MonotoneMap(images, word=(f"{kind}{k}",))


def generators(n: int) -> list:
    return [make_coercion(kind, k, n) for kind in "TG" for k in range(n - 1)]


def compose_maps(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Monoid product ``fg``, the function ``j -> g(f(j))``."""
    _check_same_n(f, g)
    return MonotoneMap(tuple(g.images[i] for i in f.images), word=f.word + g.word)


def all_monotone(n: int) -> set:
    """Brute force: every weakly increasing length-n sequence over range(n)."""
    return {MonotoneMap(c) for c in combinations_with_replacement(range(n), n)}


def enumerate_monoid(n: int) -> set:
    """Close ``{T_k, G_k}`` plus the identity under the monoid product."""
    if n < 2:
        raise LevelRangeError("the monoid is generated only for n >= 2")
    gens = generators(n)
    seen = {identity(n)}
    work = [identity(n)]
    while work:
        f = work.pop()
        for g in gens:
            h = compose_maps(f, g)
            if h not in seen:
                seen.add(h)
                work.append(h)
    return seen


@dataclass(frozen=True)
class NatCell:
    source: MonotoneMap
    target: MonotoneMap

    @property
    def components(self) -> tuple:
        """Component at ``i`` is the unique arrow ``m_{source(i), target(i)}``."""
        return tuple(zip(self.source.images, self.target.images))


def cell_exists(f: MonotoneMap, g: MonotoneMap) -> Optional[NatCell]:
    _check_same_n(f, g)
    return NatCell(f, g) if f <= g else None


def epsilon(k: int, n: int) -> NatCell:
    return NatCell(make_coercion("G", k, n), identity(n))


def eta(k: int, n: int) -> NatCell:
    return NatCell(identity(n), make_coercion("T", k, n))


def generate_cells(n: int) -> set:
    """All (source, target) pairs reachable from the eta/epsilon cells.

    Closure under identities, vertical composition and whiskering on
    either side by generators (whiskering by a product of generators is
    iterated whiskering, so generators suffice).
    """
    monoid = enumerate_monoid(n)
    gens = generators(n)
    cells = {(f, f) for f in monoid}
    for k in range(n - 1):
        for c in (epsilon(k, n), eta(k, n)):
            cells.add((c.source, c.target))
    by_source: dict = {}
    by_target: dict = {}
    for a, b in cells:
        by_source.setdefault(a, set()).add(b)
        by_target.setdefault(b, set()).add(a)
    work = list(cells)

    def add(a, b):
        if (a, b) not in cells:
            cells.add((a, b))
            by_source.setdefault(a, set()).add(b)
            by_target.setdefault(b, set()).add(a)
            work.append((a, b))

    while work:
        a, b = work.pop()
        for m in gens:
            add(compose_maps(a, m), compose_maps(b, m))
            add(compose_maps(m, a), compose_maps(m, b))
        for c in list(by_source.get(b, ())):
            add(a, c)
        for z in list(by_target.get(a, ())):
            add(z, b)
    return cells


def check_adjunction(left: MonotoneMap, right: MonotoneMap) -> bool:
    """Adjunction ``left -| right`` in the monoid read with reversed composition.

    In M_n^op the 1-cell ``right . left`` of the unit is the function
    ``left o right``, so ``left -| right`` there is the poset adjunction
    ``right -| left``:  ``right(x) <= y  iff  x <= left(y)``.
    """
    _check_same_n(left, right)
    return poset_adjoint(right, left)


def poset_adjoint(lower: MonotoneMap, upper: MonotoneMap) -> bool:
    """Galois connection ``lower(x) <= y  iff  x <= upper(y)``."""
    _check_same_n(lower, upper)
    r = range(lower.n)
    return all((lower(x) <= y) == (x <= upper(y)) for x, y in product(r, r))


def adjunction_chain(n: int) -> Iterator[tuple]:
    """Adjacent pairs of ``T_0 -| G_0 -| T_1 -| G_1 -| ... -| G_{n-2}``."""
    for k in range(n - 1):
        yield make_coercion("T", k, n), make_coercion("G", k, n)
        if k + 1 <= n - 2:
            yield make_coercion("G", k, n), make_coercion("T", k + 1, n)


def relabel_level(f: MonotoneMap, j: int) -> Optional[int]:
    """Where a level-``j`` object goes under ``f``; ``None`` means the unit.

    Level ``j`` is the chain that is inhabited at positions ``0..j``;
    precomposing with ``f`` leaves it inhabited exactly where
    ``f(i) <= j``, a down-set.
    """
    inhabited = [i for i in range(f.n) if f(i) <= j]
    return inhabited[-1] if inhabited else None
