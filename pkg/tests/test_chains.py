import pytest
from hypothesis import given, settings, strategies as st

from ncomp import chains
from ncomp.chains import (
    ChainMor, ChainObj, apply_Ge, apply_Te, chain_tensor, chain_unit, compose_mor, enumerate_chains,
    enumerate_morphisms, eps, eta, identity_mor, left_unitor, levels_of, monoid_relations,
    reflect_word, succ_mor, sym_mor, tensor_mor, zero_mor,
)
from ncomp.errors import ShapeError

N3 = 3


@st.composite
def chain_objs(draw, n=N3, presheaf=False, max_size=3):
    sizes = draw(st.lists(st.integers(1, max_size), min_size=n, max_size=n))
    maps = []
    for i in range(n - 1):
        src, dst = (i, i + 1) if not presheaf else (i + 1, i)
        maps.append(tuple(draw(st.integers(0, sizes[dst] - 1)) for _ in range(sizes[src])))
    return ChainObj(tuple(sizes), tuple(maps), presheaf)


@st.composite
def chain_mors(draw, presheaf=False):
    a = draw(chain_objs(presheaf=presheaf))
    b = draw(chain_objs(presheaf=presheaf))
    ms = list(enumerate_morphisms(a, b))
    if not ms:
        return identity_mor(a)
    return draw(st.sampled_from(ms))


@st.composite
def composable(draw, presheaf=False):
    f = draw(chain_mors(presheaf))
    c = draw(chain_objs(presheaf=presheaf))
    gs = list(enumerate_morphisms(f.dst, c))
    g = draw(st.sampled_from(gs)) if gs else identity_mor(f.dst)
    return f, g


OPS = [(apply_Te, k) for k in range(N3 - 1)] + [(apply_Ge, k) for k in range(N3 - 1)]


def test_validation():
    with pytest.raises(ShapeError):
        ChainObj((2, 2), ((0, 2),))
    a = ChainObj((2, 2), ((0, 1),))
    with pytest.raises(ShapeError):
        ChainMor(a, a, ((1, 0), (0, 1)))


def test_product_sizes_and_unit():
    a = ChainObj((2, 2, 2), ((0, 1), (1, 0)))
    b = ChainObj((3, 3, 3), ((0, 1, 2), (2, 1, 0)))
    assert chain_tensor(a, b).sizes == (6, 6, 6)
    u = chain_unit(3)
    assert chain_tensor(u, a) == a
    assert left_unitor(a).components == identity_mor(a).components


def test_symmetry_swaps_pairs():
    a = ChainObj((2, 1), ((0, 0),))
    b = ChainObj((3, 1), ((0, 0, 0),))
    s = sym_mor(a, b)
    # token x*|B|+y goes to y*|A|+x
    assert s.components[0][1 * 3 + 2] == 2 * 2 + 1
    assert compose_mor(sym_mor(b, a), s) == identity_mor(chain_tensor(a, b))


def test_levels():
    lv = levels_of(2, 4)
    assert lv[0].sizes == (2, 1, 1, 1)
    assert lv[3].sizes == (2, 2, 2, 2)
    assert all(m == (0, 1) for m in lv[3].maps)
    assert apply_Ge(0, lv[0]) == lv[1]
    assert apply_Te(0, lv[0]) == chain_unit(4)
    assert apply_Ge(2, lv[2]) == lv[3]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("presheaf", [False, True])
def test_levels_table(n, presheaf):
    for op, row in chains.levels_table(n, presheaf=presheaf):
        assert all(ok for _, _, ok in row), op


def test_levels_table_matches_generator_rule():
    rows = dict(chains.levels_table(4))
    assert [e[0] for e in rows["T0"]] == ["1^n", "X^1", "X^2", "X^3"]
    assert [e[0] for e in rows["G0"]] == ["X^1", "X^1", "X^2", "X^3"]
    assert [e[0] for e in rows["T2"]] == ["X^0", "X^1", "X^1", "X^3"]


def test_truncated_naturals():
    for k in range(3):
        z, s = zero_mor(k, 3, 4), succ_mor(k, 3, 4)
        assert z.dst == levels_of(5, 3)[k]
        assert compose_mor(s, z).components[0] == (1,)
        assert s.components[0] == (1, 2, 3, 4, 4)


@given(chain_objs())
def test_unit_fixed_and_identity_preserved(a):
    u = chain_unit(N3)
    for op, k in OPS:
        assert op(k, u) == u
        assert op(k, identity_mor(a)) == identity_mor(op(k, a))


@settings(max_examples=60)
@given(composable())
def test_coercions_preserve_composition(fg):
    f, g = fg
    for op, k in OPS:
        assert op(k, compose_mor(g, f)) == compose_mor(op(k, g), op(k, f))


@settings(max_examples=60)
@given(chain_mors(), chain_mors())
def test_coercions_preserve_tensor(f, g):
    for op, k in OPS:
        assert op(k, tensor_mor(f, g)) == tensor_mor(op(k, f), op(k, g))
        assert op(k, chain_tensor(f.src, g.src)) == chain_tensor(op(k, f.src), op(k, g.src))


@settings(max_examples=60)
@given(chain_mors())
def test_unit_and_counit_are_natural(f):
    for k in range(N3 - 1):
        assert compose_mor(eta(k, f.dst), f) == compose_mor(apply_Te(k, f), eta(k, f.src))
        assert compose_mor(f, eps(k, f.src)) == compose_mor(eps(k, f.dst), apply_Ge(k, f))


@settings(max_examples=60)
@given(chain_mors(presheaf=True))
def test_presheaf_cells_are_natural(f):
    for k in range(N3 - 1):
        assert compose_mor(f, eta(k, f.src)) == compose_mor(eta(k, f.dst), apply_Te(k, f))
        assert compose_mor(eps(k, f.dst), f) == compose_mor(apply_Ge(k, f), eps(k, f.src))


@settings(max_examples=40)
@given(chain_objs(), chain_objs())
def test_cells_are_monoidal(a, b):
    for k in range(N3 - 1):
        assert eta(k, chain_tensor(a, b)) == tensor_mor(eta(k, a), eta(k, b))
        assert eps(k, chain_tensor(a, b)) == tensor_mor(eps(k, a), eps(k, b))


def _act(word, a):
    for kind, k in reversed(word):
        a = (apply_Te if kind == "T" else apply_Ge)(k, a)
    return a


def test_monoid_relations_hold_in_chain_model():
    rels = monoid_relations(3, 3)
    assert rels
    for a in enumerate_chains(3, 2):
        for w1, w2 in rels:
            assert _act(w1, a) == _act(w2, a)


def test_presheaf_relations_need_reflected_indices():
    rels = monoid_relations(3, 3)
    ps = list(enumerate_chains(3, 2, presheaf=True))
    same = [(w1, w2) for w1, w2 in rels if any(_act(w1, a) != _act(w2, a) for a in ps)]
    assert same, "same-index assignment unexpectedly respects every relation"
    for w1, w2 in rels:
        r1, r2 = reflect_word(w1, 3), reflect_word(w2, 3)
        assert all(_act(r1, a) == _act(r2, a) for a in ps)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("presheaf", [False, True])
def test_comprehension_laws_small(n, presheaf):
    rep = chains.comprehension_laws(n, 2, presheaf=presheaf)
    assert rep.ok, [r for r in rep.results if not r.ok]


def test_chain_counts():
    assert len(list(enumerate_chains(2, 2))) == 11
    assert len(list(enumerate_chains(3, 2))) == 47
