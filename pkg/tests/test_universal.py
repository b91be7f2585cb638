from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from friezegrowth.arith import ZZ, LaurentPolynomial
from friezegrowth.frieze import Frieze, growth_coefficient, homogeneous_frieze
from friezegrowth.universal import (
    continuant,
    continuant_difference,
    cyclic_growth_poly,
    monomial_expansion,
    splitting_identity_check,
    universal_growth,
    z_names,
)


def Z(text, n):
    return LaurentPolynomial.parse(text, n)


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def tridiagonal_det(diag):
    """Leibniz expansion; only permutations moving entries by at most one survive."""
    n = len(diag)
    total = LaurentPolynomial.constant(diag[0].nvars if diag else 1, 0)
    for perm in permutations(range(n)):
        if any(abs(perm[k] - k) > 1 for k in range(n)):
            continue
        sign = 1
        seen = set()
        for start in range(n):
            if start in seen:
                continue
            k, length = start, 0
            while k not in seen:
                seen.add(k)
                k = perm[k]
                length += 1
            sign *= (-1) ** (length - 1)
        term = LaurentPolynomial.constant(total.nvars, sign)
        for k in range(n):
            if perm[k] == k:
                term = term * diag[k]
        total = total + term
    return total


A51 = "z_1*z_2*z_3*z_4*z_5 - z_1*z_2*z_3 - z_1*z_2*z_5 - z_1*z_4*z_5 - z_3*z_4*z_5 + z_1 + z_3 + z_5"
S51 = ("z_1*z_2*z_3*z_4*z_5 - z_1*z_2*z_3 - z_1*z_2*z_5 - z_1*z_4*z_5 - z_2*z_3*z_4"
       " - z_3*z_4*z_5 + z_1 + z_2 + z_3 + z_4 + z_5")


def test_small_continuants():
    assert continuant(1, 0) == 1
    assert continuant(1, -1) == 0
    assert continuant(3, 1, nvars=4) == LaurentPolynomial.variable(4, 2)
    assert continuant(2, 1, r=2) == LaurentPolynomial.variable(2, 1)


def test_continuant_five():
    p = continuant(1, 5)
    assert p == Z(A51, 5)
    assert p.to_text(z_names(5)) == A51
    assert len(p) == 8


def test_monomial_expansion_examples():
    assert monomial_expansion(1, 5) == Z(A51, 5)
    assert monomial_expansion(1, 2) == Z("z_1*z_2 - 1", 2)
    assert len(monomial_expansion(1, 4)) == fib(5) == 5


def test_cyclic_five():
    p = cyclic_growth_poly(1, 5)
    assert p.to_text(z_names(5)) == S51
    assert len(p) == 11 == lucas(5)


def test_cyclic_two_counts_both_pairs():
    assert cyclic_growth_poly(1, 2) == Z("z_1*z_2 - 2", 2)
    assert cyclic_growth_poly(1, 2) == continuant_difference(1, 2)


@pytest.mark.parametrize("i", range(0, 11))
def test_expansion_matches_continuant(i):
    p = monomial_expansion(1, i, nvars=max(i, 1))
    assert p == continuant(1, i, nvars=max(i, 1))
    assert len(p) == fib(i + 1)


@pytest.mark.parametrize("i", range(2, 11))
def test_cyclic_matches_difference(i):
    p = cyclic_growth_poly(1, i)
    assert p == continuant_difference(1, i)
    assert sum(abs(c) for _, c in p.terms()) == lucas(i)
    # for even i the two perfect matchings share the empty monomial
    assert len(p) == lucas(i) - (1 if i % 2 == 0 else 0)


@pytest.mark.parametrize("i, j, r", [(4, 2, 3), (7, 1, 3), (6, 3, 4), (5, 2, None), (9, 4, 2)])
def test_periodic_and_shifted_expansions(i, j, r):
    assert monomial_expansion(j, i, r) == continuant(j, i, r)
    assert cyclic_growth_poly(j, i, r) == continuant_difference(j, i, r)


@pytest.mark.parametrize("n", range(3, 7))
def test_determinant_oracle(n):
    zs = LaurentPolynomial.variables(n)
    assert tridiagonal_det(list(zs)) == continuant(1, n)


@pytest.mark.parametrize("i", range(1, 9))
def test_splitting_identity(i):
    for l in range(1, i + 1):
        assert splitting_identity_check(i, 1, l)
        assert splitting_identity_check(i, 2, l, r=3)


def test_splitting_boundaries():
    check = splitting_identity_check(5, 1, 5)
    assert check.ok and check.lhs == check.rhs == continuant(1, 5)
    with pytest.raises(ValueError):
        splitting_identity_check(3, 1, 0)


def test_universal_growth_examples():
    assert universal_growth(1, 2) == cyclic_growth_poly(1, 2, 2)
    g3 = universal_growth(1, 3)
    assert g3.to_text(z_names(3)) == "z_1*z_2*z_3 - z_1 - z_2 - z_3"
    assert g3.specialize([3, 5, 9], ZZ) == 118


def test_universal_growth_rank_one():
    z, = LaurentPolynomial.variables(1)
    assert universal_growth(1, 1) == z
    assert universal_growth(2, 1) == growth_coefficient(homogeneous_frieze(z, depth=3), 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_universal_growth_column_independent(r):
    g = universal_growth(1, r)
    assert all(continuant_difference(j, r, r) == g for j in range(1, r + 1))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_universal_chebyshev(r):
    s1, s2, s3 = (universal_growth(k, r) for k in (1, 2, 3))
    assert s2 == s1 * s1 - 2
    assert s3 == s1 * s2 - s1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 12), min_size=2, max_size=4))
def test_universal_specializes_to_integer_frieze(q):
    expected = growth_coefficient(Frieze(q), declared_period=True)
    assert universal_growth(1, len(q)).specialize(q, ZZ) == expected


def test_bad_arguments():
    with pytest.raises(ValueError):
        continuant(0, 3)
    with pytest.raises(ValueError):
        continuant(1, -2)
    with pytest.raises(ValueError):
        cyclic_growth_poly(1, 1)
    with pytest.raises(ValueError):
        universal_growth(0, 2)
