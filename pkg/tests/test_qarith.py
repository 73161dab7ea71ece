"""Tests for the exact coefficient field and q-combinatorics.

The balanced binomial is checked against an independent oracle: the literal
product formula evaluated by honest division in Q(v).
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgrass.qarith import (
    GENERIC,
    CharProfile,
    LaurentPoly,
    QParity,
    char_of,
    cyclotomic_poly,
    q_binom,
    q_binom_at_char,
    q_binom_split,
    q_binom_unbalanced,
    q_factorial,
    q_int,
    root_of_unity,
)

D3 = root_of_unity(3)
D8 = root_of_unity(8)


def binom_product_formula(s: int, r: int):
    """Oracle: prod_{i=1}^r (v^{s-i+1} - v^{-s+i-1}) / (v^i - v^-i) in Q(v)."""
    if r < 0:
        return GENERIC.zero()
    val = GENERIC.one()
    for i in range(1, r + 1):
        numer = GENERIC.q_power(s - i + 1) - GENERIC.q_power(-s + i - 1)
        denom = GENERIC.q_power(i) - GENERIC.q_power(-i)
        val = val * (numer / denom)
    return val


def to_root(generic_scalar, mode):
    assert generic_scalar.den == LaurentPoly.one()
    return mode.from_laurent(generic_scalar.num)


# ---------------------------------------------------------------------------
# LaurentPoly basics
# ---------------------------------------------------------------------------


def test_laurent_zero_has_empty_support():
    z = LaurentPoly({3: Fraction(0)})
    assert z.is_zero() and z.coeffs == {}


small_fracs = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)
laurents = st.dictionaries(st.integers(-4, 4), small_fracs, max_size=4).map(LaurentPoly)


@given(laurents, laurents, laurents)
@settings(max_examples=60, deadline=None)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert all(v != 0 for v in (a * b + c).coeffs.values())


# ---------------------------------------------------------------------------
# field axioms in both modes
# ---------------------------------------------------------------------------


def scalar_strategy(mode):
    return st.dictionaries(st.integers(-3, 3), small_fracs, max_size=3).map(
        lambda d: mode.from_laurent(LaurentPoly(d))
    )


@pytest.mark.parametrize("mode", [GENERIC, D3, D8])
def test_field_axioms_on_random_triples(mode):
    @given(scalar_strategy(mode), scalar_strategy(mode), scalar_strategy(mode))
    @settings(max_examples=40, deadline=None)
    def inner(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + mode.zero() == a
        assert a * mode.one() == a
        if not a.is_zero():
            assert a * a.inverse() == mode.one()

    inner()


def test_generic_normalization_is_canonical():
    a = GENERIC.q_power(2) - GENERIC.one()
    b = GENERIC.q() - GENERIC.one()
    quotient = a / b
    assert quotient == GENERIC.q() + GENERIC.one()
    assert quotient.den == LaurentPoly.one()


def test_root_mode_residue_degree_bound():
    for mode in (D3, D8):
        deg = cyclotomic_poly(mode.d).max_exp()
        x = mode.q_power(mode.d - 1) + mode.scalar(7)
        assert len(x.res) == deg


# ---------------------------------------------------------------------------
# q-integers
# ---------------------------------------------------------------------------


def test_q_int_examples():
    assert q_int(0).is_zero()
    assert q_int(2) == GENERIC.q() + GENERIC.q_power(-1)
    assert q_int(3, D3).is_zero()


@given(st.integers(-12, 12))
@settings(max_examples=30, deadline=None)
def test_q_int_odd_symmetry(n):
    assert q_int(-n) == -q_int(n)


def test_q_factorial_small():
    assert q_factorial(0) == GENERIC.one()
    assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)
    with pytest.raises(ValueError):
        q_factorial(-1)


# ---------------------------------------------------------------------------
# balanced Gaussian binomials
# ---------------------------------------------------------------------------


def test_binom_4_2_frozen_expansion():
    expected = LaurentPoly(
        {4: Fraction(1), 2: Fraction(1), 0: Fraction(2), -2: Fraction(1), -4: Fraction(1)}
    )
    assert q_binom(4, 2) == GENERIC.from_laurent(expected)
    assert q_binom(4, 2) == binom_product_formula(4, 2)


def test_binom_trivial_clauses():
    for s in range(-4, 8):
        assert q_binom(s, 0) == GENERIC.one()
        assert q_binom(s, -2).is_zero()
    assert q_binom(3, 5).is_zero()
    for s in range(0, 6):
        for r in range(s + 1, 8):
            assert q_binom(s, r).is_zero()


@given(st.integers(-8, 12), st.integers(-2, 8))
@settings(max_examples=120, deadline=None)
def test_binom_matches_product_formula(s, r):
    assert q_binom(s, r) == binom_product_formula(s, r)


@given(st.integers(0, 10), st.integers(0, 10))
@settings(max_examples=60, deadline=None)
def test_binom_factorial_form(s, r):
    if r <= s:
        assert q_binom(s, r) * q_factorial(r) * q_factorial(s - r) == q_factorial(s)


@given(st.integers(-6, 10), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_binom_balanced_symmetry(s, r):
    val = q_binom(s, r)
    assert val.num.invert_variable() == val.num


@given(st.integers(-6, -1), st.integers(0, 6))
@settings(max_examples=40, deadline=None)
def test_binom_negative_reflection(s, r):
    refl = q_binom(-s + r - 1, r)
    assert q_binom(s, r) == (-refl if r % 2 else refl)


@pytest.mark.parametrize("mode", [GENERIC, D3, D8])
def test_pascal_identity(mode):
    for n in range(1, 13):
        for r in range(0, n + 1):
            lhs = q_binom(n, r, mode)
            rhs = mode.q_power(r - n) * q_binom(n - 1, r - 1, mode) + mode.q_power(
                r
            ) * q_binom(n - 1, r, mode)
            assert lhs == rhs, (n, r, mode)


# ---------------------------------------------------------------------------
# unbalanced q-binomials
# ---------------------------------------------------------------------------


def test_unbalanced_examples():
    assert q_binom_unbalanced(2, 1) == GENERIC.one() + GENERIC.q()
    for p in range(0, 7):
        assert q_binom_unbalanced(p, 0) == GENERIC.one()
    assert q_binom_unbalanced(3, 1, D3).is_zero()  # 1 + q + q^2 = Phi_3(q)
    with pytest.raises(ValueError):
        q_binom_unbalanced(2, 3)
    with pytest.raises(ValueError):
        q_binom_unbalanced(2, -1)


def test_unbalanced_factorial_form():
    def brak(r):  # (r)_q as a polynomial
        return GENERIC.from_laurent(LaurentPoly({i: Fraction(1) for i in range(r)}))

    for p in range(0, 8):
        for r in range(0, p + 1):
            fact = lambda k: GENERIC.one() if k == 0 else brak(k) * fact(k - 1)
            assert q_binom_unbalanced(p, r) * fact(r) * fact(p - r) == fact(p)


# ---------------------------------------------------------------------------
# characteristic of q and the digit factorizations
# ---------------------------------------------------------------------------


def test_char_examples():
    assert char_of(GENERIC) == CharProfile(0, QParity.GENERIC_Q)
    assert char_of(D3) == CharProfile(3, QParity.ODD_ROOT)
    assert char_of(D8) == CharProfile(4, QParity.EVEN_ROOT)
    assert char_of(root_of_unity(6)) == CharProfile(3, QParity.EVEN_ROOT)
    with pytest.raises(ValueError):
        root_of_unity(2)
    with pytest.raises(ValueError):
        root_of_unity(1)


@pytest.mark.parametrize("d", [3, 5, 6, 8])
def test_digit_split_full_sweep(d):
    mode = root_of_unity(d)
    ell = char_of(mode).ell
    for s in range(0, 3 * ell + 1):
        for r in range(0, s + 1):
            assert q_binom(s, r, mode) == q_binom_split(s, r, mode), (d, s, r)
        assert q_binom(s, ell, mode) == q_binom_at_char(s, mode), (d, s)


def test_digit_split_rejects_generic():
    with pytest.raises(ValueError):
        q_binom_split(3, 1, GENERIC)
