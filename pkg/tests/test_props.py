import pytest
from hypothesis import given, settings

from ncomp.errors import TypingError
from ncomp.library import PLUS, TIMES, promote_variable, right_unitor
from ncomp.objects import N, TOP
from ncomp.props import (
    SUITES, cartesian_suite, check_equal, comonoid_morphism_check, comonoid_suite,
    derived_duplication, derived_eraser, input_tuples, recursion_diagrams, run_suite,
    strip_identities,
)
from ncomp.terms import Comp, Dup, Eraser, Id, Left, Succ, Sym, Zero, infer_type

from strategies import N_LEVELS, terms


def test_counterexample_is_reported():
    c = check_equal(Comp(Succ(0), Zero(0)), Zero(0), 5, 3, "one is zero")
    assert not c.ok
    assert c.counterexample == ((), (1,), (0,))
    assert "FAIL" in str(c)


def test_right_unitor_from_symmetry_and_left():
    x = N(1)
    assert check_equal(Comp(Left(x), Sym(x, TOP)), right_unitor(x), 6, 3).ok


def test_commutativity_of_plus_through_symmetry():
    p = promote_variable(PLUS, 0, 0, 1)
    assert check_equal(p, Comp(p, Sym(N(1), N(1))), 6, 3).ok
    with pytest.raises(TypingError):
        check_equal(PLUS, TIMES, 6, 3)


def test_identity_law_shortcut_can_be_disabled():
    lhs = Comp(Id(N(0)), Comp(Succ(0), Id(N(0))))
    assert check_equal(lhs, Succ(0), 4, 3).method == "identity laws"
    c = check_equal(lhs, Succ(0), 4, 3, use_identity_laws=False)
    assert c.method == "evaluation" and c.checked == 5


@given(terms())
def test_strip_identities_keeps_type(t):
    assert infer_type(strip_identities(t), N_LEVELS) == infer_type(t, N_LEVELS)


@settings(max_examples=100)
@given(terms())
def test_strip_identities_keeps_values(t):
    assert check_equal(t, strip_identities(t), 2, N_LEVELS, use_identity_laws=False).ok


def test_input_sampling_is_seeded():
    it, sampled = input_tuples(3, 2)
    assert not sampled and len(list(it)) == 27
    a, sampled = input_tuples(8, 9, cap=50)
    b, _ = input_tuples(8, 9, cap=50)
    assert sampled and list(a) == list(b)


@pytest.mark.parametrize("k", range(4))
def test_comonoid_laws(k):
    assert all(c.ok for c in comonoid_suite(k, 8, 4))


def test_comonoid_morphisms():
    for f in (Succ(1), Id(N(1)), Comp(Zero(0), Eraser(N(2)))):
        assert all(c.ok for c in comonoid_morphism_check(f, 8, 4))


def test_cartesian_laws():
    assert all(c.ok for c in cartesian_suite(N(1), N(1), 8, 3))
    assert all(c.ok for c in cartesian_suite(N(0), N(1), 8, 3))


def test_derived_structure():
    assert check_equal(derived_eraser(1), Eraser(N(1)), 10, 3).ok
    assert check_equal(derived_duplication(1), Dup(N(1)), 8, 3).ok
    with pytest.raises(ValueError):
        derived_duplication(0)


@pytest.mark.parametrize("t", [PLUS, TIMES])
def test_recursion_diagrams(t):
    assert all(c.ok for c in recursion_diagrams(t, 6, 3))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_named_suites(name):
    checks = run_suite(name, 6, 4)
    assert checks and all(c.ok for c in checks), [str(c) for c in checks if not c.ok]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
