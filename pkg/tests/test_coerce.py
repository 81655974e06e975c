import pytest
from hypothesis import given, settings, strategies as st

from ncomp.coerce import (
    CoercionOpId, G, T, apply_mor, apply_obj, apply_word, bar, bar_steps, chi, chi_variants,
    eps_component, eta_component, relabel_obj, safe_comp_square, word_for_map,
)
from ncomp.errors import LevelRangeError, StrictnessError
from ncomp.evaluate import denote
from ncomp.library import EXP, TETRA
from ncomp.objects import N, Obj, ObjNF, TOP
from ncomp.terms import Comp, Drop, Eraser, Id, Succ, Zero, infer_type

from strategies import N_LEVELS, inputs_for, terms

GENS = [c(k) for k in range(N_LEVELS - 1) for c in (T, G)]
words = st.lists(st.sampled_from(GENS), max_size=5)
objs = st.lists(st.integers(0, N_LEVELS - 1), max_size=4).map(lambda xs: Obj(tuple(xs)))


def nf(*alphas):
    return ObjNF(len(alphas), tuple(alphas))


def test_parse_and_range():
    assert CoercionOpId.parse("T0") == T(0)
    assert CoercionOpId.parse("G_2") == G(2)
    with pytest.raises(ValueError):
        CoercionOpId.parse("X1")
    with pytest.raises(LevelRangeError):
        G(2).check(3)


def test_object_tables():
    assert apply_obj(T(0), nf(1, 0, 0)).is_top
    assert apply_obj(G(1), nf(0, 1, 0)) == nf(0, 0, 1)
    assert apply_obj(G(0), nf(0, 0, 1)) == nf(0, 0, 1)
    assert apply_obj(T(2), N(2)) == N(1)


@pytest.mark.parametrize("n", range(3, 7))
def test_tables_against_rule(n):
    for i in range(n - 1):
        for j in range(n):
            t_want = TOP if i == j == 0 else N(i - 1) if i == j else N(j)
            assert apply_obj(T(i), N(j), n) == t_want
            assert apply_obj(G(i), N(j), n) == (N(i + 1) if i == j else N(j))


def test_lowering_pair_of_identities():
    assert apply_word([T(1), T(0)], nf(2, 1, 1)) == nf(0, 0, 1)


def test_morphism_tables():
    assert apply_mor(T(0), Zero(0)) == Id(TOP)
    assert apply_mor(G(0), Succ(0)) == Succ(1)
    assert apply_mor(G(1), Drop(0)) == Comp(Drop(0), Drop(1))


def test_lowering_refused_through_recursion():
    with pytest.raises(StrictnessError):
        apply_mor(T(1), EXP)


def test_components():
    assert eps_component(1, N(1)) == Drop(1)
    assert eta_component(0, N(0)) == Eraser(N(0))
    assert eta_component(1, TOP) == Id(TOP)
    c = chi(1, N(1))
    assert str(infer_type(c, 3)) == "N2 -> N0"
    assert denote(c, [7], 3) == (7,)
    assert denote(chi(0, TOP), [], 3) == ()


def test_chi_variants_agree_on_values():
    for x in (N(0), N(1), N(2)):
        c, te, ge = chi_variants(1, x)
        for v in range(11):
            assert denote(c, [v], 3) == denote(te, [v], 3) == denote(ge, [v], 3)


@pytest.mark.parametrize("n", range(3, 7))
def test_bar_identities(n):
    for k in range(n):
        for j in range(n):
            want = TOP if j <= k - 1 else N(n - 1)
            assert bar(k, N(j), n) == want
        assert bar(k, TOP, n) == TOP


def test_bar_examples_and_word():
    assert bar(1, N(0), 3) == TOP
    assert bar(1, N(1), 3) == N(2)
    assert bar_steps(2, 4) == [T(1), T(0), G(2)]
    for n in range(3, 7):
        for k in range(n):
            w = list(reversed(bar_steps(k, n)))
            assert word_for_map(w, n).images == (k,) * n


@given(words, objs)
def test_word_action_is_precomposition(w, x):
    assert relabel_obj(word_for_map(w, N_LEVELS), x) == apply_word(list(reversed(w)), x)


@given(words, words, objs)
def test_equal_products_act_equally(w1, w2, x):
    if word_for_map(w1, N_LEVELS) == word_for_map(w2, N_LEVELS):
        assert apply_word(w1[::-1], x) == apply_word(w2[::-1], x)


@settings(max_examples=150)
@given(st.data())
def test_coerced_terms_have_coerced_types(data):
    t = data.draw(terms())
    c = data.draw(st.sampled_from(GENS))
    ty = infer_type(t, N_LEVELS)
    try:
        ct = apply_mor(c, t)
    except StrictnessError:
        assert c.kind == "T"
        return
    got = infer_type(ct, N_LEVELS)
    assert got.dom == apply_obj(c, ty.dom)
    assert got.cod == apply_obj(c, ty.cod)


@settings(max_examples=150)
@given(st.data())
def test_raising_keeps_values(data):
    t = data.draw(terms())
    x = list(data.draw(inputs_for(t)))
    for k in range(N_LEVELS - 1):
        assert denote(apply_mor(G(k), t), x, N_LEVELS) == denote(t, x, N_LEVELS)


@settings(max_examples=150)
@given(st.data())
def test_lowering_above_zero_keeps_values(data):
    t = data.draw(terms())
    x = list(data.draw(inputs_for(t)))
    for k in range(1, N_LEVELS - 1):
        try:
            lt = apply_mor(T(k), t)
        except StrictnessError:
            continue
        assert denote(lt, x, N_LEVELS) == denote(t, x, N_LEVELS)


@settings(max_examples=100)
@given(st.data())
def test_coercion_preserves_composition(data):
    f = data.draw(terms(2))
    cod = infer_type(f, N_LEVELS).cod
    g = Comp(Succ(cod.factors[0]), Id(N(cod.factors[0]))) if len(cod) == 1 else Id(cod)
    for c in GENS[1::2]:
        lhs = apply_mor(c, Comp(g, f))
        rhs = Comp(apply_mor(c, g), apply_mor(c, f))
        x = list(data.draw(inputs_for(f)))
        assert denote(lhs, x, N_LEVELS) == denote(rhs, x, N_LEVELS)


def test_safe_composition_square_for_exp():
    p1, p2 = safe_comp_square(EXP, 0, 3)
    assert infer_type(p1, 3) == infer_type(p2, 3)
    arity = len(infer_type(p1, 3).dom)
    for v in range(5):
        assert denote(p1, [v] * arity, 3) == denote(p2, [v] * arity, 3)


def test_safe_composition_square_at_identity():
    p1, p2 = safe_comp_square(Id(N(2)), 0, 4)
    assert infer_type(p1, 4) == infer_type(p2, 4)
    assert denote(p1, [3], 4) == denote(p2, [3], 4) == (3,)


def test_square_needs_level_room():
    with pytest.raises(ValueError):
        safe_comp_square(EXP, 1, 4)
    assert infer_type(safe_comp_square(TETRA, 0, 4)[0], 4).cod == N(1)
