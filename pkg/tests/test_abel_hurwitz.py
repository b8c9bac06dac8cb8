from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    abel_by_definition,
    compositions_by_product,
    hurwitz_by_product,
)
from xicomb import (
    DomainError,
    SingularTermError,
    abel_sum,
    alpha,
    compositions,
    gamma2_defn,
    gamma_defn,
    hurwitz_sum,
    riordan_binomial_rhs,
    riordan_multinomial_rhs,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=10)
nonzero = rationals.filter(lambda v: v != 0)


# -- compositions -----------------------------------------------------------

def test_compositions_small():
    assert list(compositions(1, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert list(compositions(0, 2)) == [(0, 0)]
    assert list(compositions(3, 1)) == [(3,)]
    assert len(list(compositions(2, 3))) == 6


@pytest.mark.parametrize("m", range(0, 7))
@pytest.mark.parametrize("n", range(1, 5))
def test_compositions_match_brute_force(m, n):
    got = list(compositions(m, n))
    assert len(got) == len(set(got)) == comb(m + n - 1, n - 1)
    assert set(got) == compositions_by_product(m, n)
    assert got == sorted(got, reverse=True)


def test_compositions_reject_bad_input():
    with pytest.raises(DomainError):
        list(compositions(-1, 2))
    with pytest.raises(DomainError):
        list(compositions(2, 0))


# -- abel_sum ---------------------------------------------------------------

def test_abel_examples():
    assert abel_sum(2, 1, 1, 0, -1) == 16
    assert abel_sum(2, 0, 0) == 10
    assert abel_sum(1, "1/3", "2/5") == Fraction(1, 3) + Fraction(2, 5) + 2


def test_abel_returns_int_when_integral():
    assert type(abel_sum(3, 0, 0)) is int
    assert isinstance(abel_sum(2, "1/2", 0), Fraction)


@given(st.integers(1, 8), rationals, rationals,
       st.integers(-2, 2), st.integers(-2, 2))
def test_abel_matches_oracle(m, x, y, p, q):
    try:
        expected = abel_by_definition(m, x, y, p, q)
    except ZeroDivisionError:
        with pytest.raises(SingularTermError):
            abel_sum(m, x, y, p, q)
        return
    assert abel_sum(m, x, y, p, q) == expected


def test_abel_singular_term_names_k():
    with pytest.raises(SingularTermError) as info:
        abel_sum(3, -1, 5, -2, 0)
    # k=1: (x+1)=0 raised to -1
    assert info.value.index == 1
    assert "k=1" in str(info.value)


@given(st.integers(1, 20), rationals, nonzero)
def test_abel_binomial_theorem(m, x, y):
    assert abel_sum(m, x, y, 0, -1) * y == (x + y + m) ** m


@given(st.integers(1, 12), rationals, rationals,
       st.integers(-1, 2), st.integers(-1, 2))
def test_abel_reflection(m, x, y, p, q):
    try:
        left = abel_sum(m, x, y, p, q)
    except SingularTermError:
        return
    assert abel_sum(m, y, x, q, p) == left


# -- hurwitz_sum ------------------------------------------------------------

def test_hurwitz_examples():
    assert hurwitz_sum(1, [0, 0, 0], [0, 0, 0]) == 3
    assert hurwitz_sum(2, [0, 0, 0]) == 18
    assert hurwitz_sum(2, [1, 1], [0, 0]) == abel_sum(2, 1, 1, 0, 0)


@settings(max_examples=60)
@given(st.integers(1, 5), st.lists(st.tuples(rationals, st.integers(-1, 2)),
                                   min_size=1, max_size=4))
def test_hurwitz_matches_oracle(m, parts):
    xs = [x for x, _ in parts]
    ps = [p for _, p in parts]
    try:
        expected = hurwitz_by_product(m, xs, ps)
    except ZeroDivisionError:
        with pytest.raises(SingularTermError):
            hurwitz_sum(m, xs, ps)
        return
    assert hurwitz_sum(m, xs, ps) == expected


@given(st.integers(1, 10), rationals, rationals,
       st.integers(-1, 2), st.integers(-1, 2))
def test_hurwitz_two_parts_is_abel(m, x, y, p, q):
    try:
        expected = abel_sum(m, x, y, p, q)
    except SingularTermError:
        return
    assert hurwitz_sum(m, [x, y], [p, q]) == expected


@settings(max_examples=50)
@given(st.integers(1, 6),
       st.lists(st.tuples(rationals, st.integers(0, 2)), min_size=2, max_size=4),
       st.randoms(use_true_random=False))
def test_hurwitz_permutation_symmetry(m, parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert (hurwitz_sum(m, *zip(*parts)) == hurwitz_sum(m, *zip(*shuffled)))


def test_hurwitz_singular_names_composition():
    with pytest.raises(SingularTermError) as info:
        hurwitz_sum(2, [0, -1, 0], [0, -2, 0])
    comp = info.value.index
    assert sum(comp) == 2 and comp[1] == 1 and info.value.part == 1


def test_hurwitz_bad_input():
    with pytest.raises(DomainError):
        hurwitz_sum(2, [])
    with pytest.raises(DomainError):
        hurwitz_sum(2, [0, 0], [0])
    with pytest.raises(DomainError):
        hurwitz_sum(0, [0, 0])


# -- alpha and the closed-form right-hand sides ------------------------------

def test_alpha_r2_is_factorial():
    assert [alpha(k, 2) for k in range(6)] == [1, 2, 6, 24, 120, 720]


@pytest.mark.parametrize("r", [1, 2, 5, 17])
def test_alpha_empty_product(r):
    assert alpha(0, r) == 1


@pytest.mark.parametrize("k", range(8))
@pytest.mark.parametrize("r", range(1, 6))
def test_alpha_factorial_ratio(k, r):
    assert alpha(k, r) == factorial(r + k - 1) // factorial(r - 1)


def test_alpha_examples_and_errors():
    assert alpha(3, 3) == 60
    with pytest.raises(DomainError):
        alpha(2, 0)
    with pytest.raises(DomainError):
        alpha(-1, 2)


def test_riordan_binomial_examples():
    assert riordan_binomial_rhs(2, 0, 0) == 10
    assert riordan_binomial_rhs(3, 0, 0) == 78
    assert riordan_binomial_rhs(1, "3/7", "-1/2") == Fraction(3, 7) - Fraction(1, 2) + 2


def test_riordan_multinomial_examples():
    assert riordan_multinomial_rhs(1, [0, 0, 0], 3) == 3
    assert riordan_multinomial_rhs(2, [0, 0, 0], 3) == 18
    assert riordan_multinomial_rhs(3, [0, 0, 0], 3) == 159


def test_riordan_multinomial_errors():
    with pytest.raises(DomainError):
        riordan_multinomial_rhs(2, [0], 1)
    with pytest.raises(DomainError):
        riordan_multinomial_rhs(2, [0, 0], 3)


@given(st.integers(1, 20), rationals, rationals)
def test_riordan_binomial_identity(m, x, y):
    assert abel_sum(m, x, y, 0, 0) == riordan_binomial_rhs(m, x, y)


@settings(max_examples=60)
@given(st.integers(1, 8), st.lists(rationals, min_size=2, max_size=5))
def test_riordan_multinomial_identity(m, xs):
    assert hurwitz_sum(m, xs) == riordan_multinomial_rhs(m, xs)


@pytest.mark.parametrize("m", range(1, 21))
def test_bridges_to_gamma(m):
    assert abel_sum(m, 0, 0, 0, 0) == gamma_defn(m)
    assert hurwitz_sum(m, [0, 0, 0], [0, 0, 0]) == gamma2_defn(m)


def test_riordan_rejects_zero_m():
    with pytest.raises(DomainError):
        riordan_binomial_rhs(0, 1, 1)
