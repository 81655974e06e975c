import pytest
from hypothesis import given, settings, strategies as st

from ncomp.errors import FuelExhausted, ShapeError
from ncomp.evaluate import (
    Fuel, LevelTuple, denote, enumerate_closed_points, evaluate, gamma_morphism_ladder,
    gamma_object, normal_point, normalize_point, point_level,
)
from ncomp.library import DOUBLE, EXP, PLUS, PRED, TETRA, TIMES, numeral, tensor_all
from ncomp.objects import N, TOP
from ncomp.terms import Comp, Drop, Id, Succ, Tensor, Zero, infer_type, size

from strategies import N_LEVELS, inputs_for, terms


def test_examples():
    assert denote(PLUS, [2, 3], 3) == (5,)
    assert denote(EXP, [2, 3], 3) == (9,)
    assert denote(Id(N(1)), [7], 3) == (7,)
    assert denote(TETRA, [2, 2], 4) == (16,)


def test_level_tuple_evaluation():
    out = evaluate(PLUS, LevelTuple(N(1) @ N(0), (2, 3)))
    assert out == LevelTuple(N(0), (5,))
    with pytest.raises(ShapeError):
        evaluate(PLUS, LevelTuple(N(0) @ N(1), (2, 3)))
    with pytest.raises(ShapeError):
        LevelTuple(N(0), (1, 2))


def test_bad_arguments():
    with pytest.raises(ShapeError):
        denote(PLUS, [1], 3)
    with pytest.raises(ShapeError):
        denote(PLUS, [1, -1], 3)


def test_numerals():
    assert normalize_point(Zero(1), 3) == 0
    assert normalize_point(Comp(Succ(0), Comp(Succ(0), Zero(0))), 3) == 2
    pt = Comp(PLUS, Tensor(numeral(1, 2), numeral(0, 2)))
    assert normalize_point(pt, 3) == 4
    assert normal_point(pt, 3) == numeral(0, 4)
    assert point_level(pt, 3) == 0


def test_normal_point_needs_a_closed_point():
    with pytest.raises(ShapeError):
        normal_point(Succ(0), 3)


def test_fuel_exhaustion():
    with pytest.raises(FuelExhausted):
        denote(TETRA, [3, 3], 4, fuel=1000)
    with pytest.raises(ValueError):
        Fuel(0)


@settings(max_examples=50)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 200))
def test_fuel_is_monotone(x, y, budget):
    try:
        small = denote(TIMES, [x, y], 3, fuel=budget)
    except FuelExhausted:
        return
    assert denote(TIMES, [x, y], 3, fuel=budget * 2) == small


@given(st.integers(0, 50))
def test_drops_are_transparent(v):
    for j in range(N_LEVELS - 1):
        assert denote(Drop(j), [v], N_LEVELS) == (v,)


@given(st.integers(0, 30), st.integers(0, 30))
def test_hyperoperation_oracles(x, y):
    assert denote(PLUS, [x, y], 3) == (x + y,)
    assert denote(TIMES, [x % 8, y], 3) == ((x % 8) * y,)
    assert denote(PRED, [x], 3) == (max(x - 1, 0),)
    assert denote(DOUBLE, [x], 3) == (2 * x,)


@settings(max_examples=200)
@given(st.data())
def test_normalizer_agrees_with_evaluator(data):
    t = data.draw(terms())
    ty = infer_type(t, N_LEVELS)
    if len(ty.cod) != 1:
        return
    x = data.draw(inputs_for(t))
    pt = Comp(t, tensor_all([numeral(j, v) for j, v in zip(ty.dom.factors, x)])) if x else t
    assert (normalize_point(pt, N_LEVELS),) == denote(pt, [], N_LEVELS)


def test_closed_point_canonicity_small():
    points = enumerate_closed_points(3, 9)
    assert sum(map(len, points.values())) > 50
    for level, ts in points.items():
        for t in ts:
            assert size(t) <= 9
            assert point_level(t, 3) == level
            assert normal_point(t, 3) == numeral(level, denote(t, [], 3)[0])


def test_gamma_objects():
    assert [str(o) for o in gamma_object(TOP.normal_form(4)).labels] == ["1"] * 4
    top = gamma_object(N(3).normal_form(4))
    assert top.labels == ["N3"] * 4
    assert all(denote(m, [5], 4) == (5,) for m in top.maps)
    assert str(gamma_object(N(1).normal_form(3))) == "N2 -> N2 -> 1"


@pytest.mark.parametrize("f,bound", [
    (Succ(1), 10), (Id(N(1)), 10), (DOUBLE, 8), (PRED, 8), (Drop(1), 8),
])
def test_ladders_commute(f, bound):
    report = gamma_morphism_ladder(f, bound, 3)
    assert report.ok, str(report)
    assert report.rungs_checked == 2
