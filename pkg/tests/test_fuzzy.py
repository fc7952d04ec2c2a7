from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from krasner.errors import UsageError
from krasner.fuzzy import (
    Carrier, FuzzySubset, characteristic, equal, fuzzy_point, grade, join, support,
    threshold_set, zero,
)

G = Carrier(("a", "b", "c", "d"))

grades = st.fractions(min_value=0, max_value=1, max_denominator=12)
fuzzy = st.lists(grades, min_size=4, max_size=4).map(lambda gs: FuzzySubset(G, tuple(gs)))
label_sets = st.frozensets(st.sampled_from(G.labels))
positive = st.fractions(min_value=0, max_value=1, max_denominator=12).filter(lambda t: t > 0)


def test_support_of_characteristic():
    assert support(characteristic(G, {"b"})) == {"b"}


def test_support_of_zero_is_empty():
    assert support(zero(G)) == frozenset()


def test_threshold_set_grades():
    mu = threshold_set(G, {"a", "b"}, Fraction(1, 2))
    assert mu.grades == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    assert support(threshold_set(G, {"a", "b"}, Fraction(1, 3))) == {"a", "b"}


def test_threshold_set_specials():
    assert threshold_set(G, {"a"}, 1) == characteristic(G, {"a"})
    assert threshold_set(G, set(), Fraction(2, 7)) == zero(G)
    assert fuzzy_point(G, "c", Fraction(1, 4))["c"] == Fraction(1, 4)
    with pytest.raises(UsageError):
        threshold_set(G, {"a"}, 0)


def test_join_examples():
    lo, hi = fuzzy_point(G, "a", Fraction(3, 10)), fuzzy_point(G, "a", Fraction(3, 5))
    assert join([lo, hi]) == hi
    assert join([lo, zero(G)]) == lo
    assert join([characteristic(G, {"a"}), characteristic(G, {"b"})]) == characteristic(G, {"a", "b"})
    with pytest.raises(UsageError):
        join([])


def test_equal_modes():
    half, third = fuzzy_point(G, "a", Fraction(1, 2)), fuzzy_point(G, "a", Fraction(1, 3))
    assert equal(half, fuzzy_point(G, "a", Fraction(1, 2)), "strict")
    assert not equal(half, third, "strict")
    assert equal(half, third, "support")
    assert not equal(characteristic(G, {"a"}), characteristic(G, {"b"}), "support")


def test_grades_are_exact_and_bounded():
    assert grade("2/4") == Fraction(1, 2)
    for bad in ("3/2", "-1/3", 0.5, "x"):
        with pytest.raises(UsageError):
            grade(bad)


def test_carrier_rejects_duplicates():
    with pytest.raises(UsageError):
        Carrier(("a", "a"))


@given(fuzzy, fuzzy)
def test_join_commutative(mu, nu):
    assert join([mu, nu]) == join([nu, mu])


@given(fuzzy, fuzzy, fuzzy)
def test_join_associative(mu, nu, xi):
    assert join([join([mu, nu]), xi]) == join([mu, join([nu, xi])])


@given(fuzzy)
def test_join_idempotent_with_zero_neutral(mu):
    assert join([mu, mu]) == mu
    assert join([mu, zero(G)]) == mu


@given(fuzzy, fuzzy)
def test_support_of_join_is_union(mu, nu):
    assert support(join([mu, nu])) == support(mu) | support(nu)


@given(label_sets, positive)
def test_support_of_threshold_set(H, t):
    assert support(threshold_set(G, H, t)) == H


@given(fuzzy, fuzzy)
def test_strict_equality_refines_support_equality(mu, nu):
    if equal(mu, nu, "strict"):
        assert equal(mu, nu, "support")
