import pytest
from hypothesis import given, strategies as st

from ncomp.errors import CompositionError
from ncomp.evaluate import denote
from ncomp.library import (
    DOUBLE, EXP, PLUS, PRED, TETRA, TIMES, const, drop_chain, elaborate_psrr, numeral, pair,
    permute, proj1, proj2, promote_variable, species_signature, stdlib, strict_check,
    validate_safe_composition,
)
from ncomp.objects import N, Obj
from ncomp.terms import PSRR, Comp, Drop, Eraser, Id, LowerT, Succ, Tensor, infer_type

small = st.integers(0, 6)


@given(small, small)
def test_plus_recurrence(x, y):
    assert denote(PLUS, [0, y], 3) == (y,)
    assert denote(PLUS, [x + 1, y], 3) == (denote(PLUS, [x, y], 3)[0] + 1,)


@given(small, small)
def test_times_recurrence(x, y):
    assert denote(TIMES, [0, y], 3) == (0,)
    rec = denote(TIMES, [x, y], 3)[0]
    assert denote(TIMES, [x + 1, y], 3) == denote(PLUS, [y, rec], 3)


@given(st.integers(0, 3), st.integers(0, 4))
def test_exp_closed_form(x, y):
    assert denote(EXP, [x, y], 3) == (y ** x,)


def test_tetra_recurrence():
    for x in range(3):
        for y in range(3):
            rec = denote(TETRA, [x, y], 4)[0]
            assert denote(TETRA, [0, y], 4) == (y,)
            assert denote(TETRA, [x + 1, y], 4) == denote(EXP, [y, rec], 4)
    assert denote(TETRA, [2, 2], 4) == (16,)


def test_pred_and_double():
    assert [denote(PRED, [x], 3)[0] for x in range(4)] == [0, 0, 1, 2]
    assert [denote(DOUBLE, [x], 3)[0] for x in range(4)] == [0, 2, 4, 6]


def test_species_signatures():
    got = {k: str(species_signature(v)) for k, v in stdlib().items()}
    assert got["plus"] == "(1,0;0)"
    assert got["times"] == "(1,1;0)"
    assert got["exp"] == "(2,1;1)"
    assert got["tetra"] == "(3,2;1)"


@pytest.mark.parametrize("t,bx,by", [(TIMES, 6, 6), (EXP, 4, 4), (TETRA, 3, 2)])
def test_elaborated_psrr_agrees(t, bx, by):
    e = elaborate_psrr(t)
    assert infer_type(e, 4) == infer_type(t, 4)
    for x in range(bx + 1):
        for y in range(by + 1):
            assert denote(e, [x, y], 4) == denote(t, [x, y], 4)


def test_elaborated_last_value_recursion():
    t = PSRR(0, Id(N(0)), proj2(N(0), N(0)))
    e = elaborate_psrr(t)
    for x in range(5):
        for y in range(5):
            assert denote(e, [x, y]) == denote(t, [x, y]) == (y,)


def test_safe_composition_levels():
    assert not validate_safe_composition(PLUS, {1: [Id(N(1))], 0: [EXP]}, 3)
    assert validate_safe_composition(PLUS, {1: [numeral(0, 5)], 0: [Id(N(0))]}, 3)
    with pytest.raises(CompositionError):
        validate_safe_composition(PLUS, {1: [], 0: [Id(N(0))]}, 3)


@given(small, small)
def test_promotion_keeps_values(x, y):
    p = promote_variable(PLUS, 0, 0, 1)
    assert str(infer_type(p, 3)) == "N1 * N1 -> N0"
    assert denote(p, [x, y], 3) == denote(PLUS, [x, y], 3)


def test_one_step_promotion_is_a_single_drop():
    p = promote_variable(PLUS, 0, 0, 1)
    assert p.inner == Tensor(Id(N(1)), Drop(0))


def test_promote_tetra_argument():
    p = promote_variable(TETRA, 2, 0, 3, n=5)
    for x in range(3):
        for y in range(3):
            assert denote(p, [x, y], 5) == denote(TETRA, [x, y], 5)


def test_strict_check():
    assert all(strict_check(t) for t in stdlib().values())
    assert strict_check(Id(N(0)))
    assert not strict_check(Comp(LowerT(1, Succ(1)), Id(N(1))))


def test_pair_and_projections():
    p = pair(Succ(1), Id(N(1)), 3)
    for x in range(5):
        assert denote(Comp(proj1(N(1), N(1)), p), [x]) == (x + 1,)
        assert denote(Comp(proj2(N(1), N(1)), p), [x]) == (x,)
    with pytest.raises(CompositionError):
        pair(Succ(1), Succ(0), 3)


def test_drop_chain_and_permute():
    assert str(infer_type(drop_chain(3, 0), 4)) == "N3 -> N0"
    assert drop_chain(2, 2) == Id(N(2))
    x = Obj((0, 1, 2))
    t = permute(x, [2, 0, 1])
    assert str(infer_type(t, 3).cod) == "N2 * N0 * N1"
    assert denote(t, [5, 6, 7]) == (7, 5, 6)


def test_const_ignores_input():
    assert denote(const(0, 3, N(1) @ N(2)), [9, 9], 3) == (3,)
    assert denote(Comp(numeral(1, 2), Eraser(N(0))), [4], 3) == (2,)
