"""Tests for the linear-polynomial arithmetic.

The independent oracle evaluates the four-term binomial expansion
C(t,1) - C(t-m0,1) + C(t+1,2) - C(t+1-m1,2) with the polynomial extension
of the binomial coefficient, which is defined for negative arguments.
"""

import math
import random

import pytest
from hypothesis import given, strategies as st

from sbcurves import (
    BinomialDecomposition,
    InvariantError,
    NumPoly,
    PreconditionError,
    decompose,
    h1_upper_bound,
    hilb_nonempty,
)


def binom_poly(x, k):
    """Binomial coefficient as a polynomial in x: x(x-1)...(x-k+1)/k!.

    Exact for every integer x (the numerator is a product of k consecutive
    integers, hence divisible by k!).
    """
    num = 1
    for i in range(k):
        num *= x - i
    quotient, remainder = divmod(num, math.factorial(k))
    assert remainder == 0
    return quotient


def binomial_sum(m0, m1, t):
    """The oracle expansion whose coefficients define (m0, m1)."""
    return (
        binom_poly(t, 1)
        - binom_poly(t - m0, 1)
        + binom_poly(t + 1, 2)
        - binom_poly(t + 1 - m1, 2)
    )


# expected (m0, m1) computed with the oracle: binomial_sum reproduces r*t + s
# at t = 0..5 exactly for these pairs
@pytest.mark.parametrize(
    "r,s,m0,m1",
    [
        (5, 0, 10, 5),
        (0, 1, 1, 0),
        (3, 0, 3, 3),
    ],
)
def test_decompose_known_values(r, s, m0, m1):
    dec = decompose(NumPoly(r, s))
    assert (dec.m0, dec.m1) == (m0, m1)
    for t in range(6):
        assert binomial_sum(m0, m1, t) == r * t + s


def test_decompose_rejects_negative_r():
    with pytest.raises(PreconditionError):
        decompose(NumPoly(-1, 0))
    with pytest.raises(PreconditionError):
        hilb_nonempty(NumPoly(-3, 2))


def test_numpoly_rejects_floats():
    with pytest.raises(InvariantError):
        NumPoly(5.0, 0)
    with pytest.raises(InvariantError):
        NumPoly(5, 0.5)
    with pytest.raises(InvariantError):
        NumPoly(True, 0)


def test_round_trip_bulk():
    # ten thousand random pairs, fixed seed; decompose then re-evaluate
    rng = random.Random(20260809)
    for _ in range(10_000):
        r = rng.randint(0, 1000)
        s = rng.randint(-1000, 1000)
        dec = decompose(NumPoly(r, s))
        assert dec.m1 == r
        for t in range(6):
            expected = r * t + s
            assert binomial_sum(dec.m0, dec.m1, t) == expected
            assert dec.value_at(t) == expected
        assert dec.to_poly() == NumPoly(r, s)


@given(st.integers(0, 1000), st.integers(-1000, 1000), st.integers(-10, 10))
def test_reconstruction_identity(r, s, t):
    dec = decompose(NumPoly(r, s))
    assert dec.value_at(t) == r * t + s


@given(st.integers(0, 200), st.integers(-400, 400))
def test_hilb_nonempty_monotone_in_s(r, s):
    if hilb_nonempty(NumPoly(r, s)):
        assert hilb_nonempty(NumPoly(r, s + 1))


@pytest.mark.parametrize(
    "r,s,expected",
    [
        (5, 0, True),
        (0, 0, True),
        (5, -6, False),
        (0, 1, True),
        # a line has polynomial t + 1; bare t admits no subscheme
        (1, 0, False),
        (1, 1, True),
    ],
)
def test_hilb_nonempty_cases(r, s, expected):
    assert hilb_nonempty(NumPoly(r, s)) is expected


def test_hilb_nonempty_boundary():
    # m0 = m1 is the boundary of the criterion: 5t - 5 gives (5, 5)
    dec = decompose(NumPoly(5, -5))
    assert (dec.m0, dec.m1) == (5, 5)
    assert hilb_nonempty(NumPoly(5, -5))
    assert not hilb_nonempty(NumPoly(5, -6))


@pytest.mark.parametrize("r,h0,expected", [(5, 1, 6), (3, 1, 1), (1, 1, 0)])
def test_h1_upper_bound_values(r, h0, expected):
    assert h1_upper_bound(r, h0) == expected


def test_h1_upper_bound_domain():
    with pytest.raises(PreconditionError):
        h1_upper_bound(0, 1)
    with pytest.raises(PreconditionError):
        h1_upper_bound(3, -1)


def test_decomposition_is_exact_integer_arithmetic():
    dec = decompose(NumPoly(999, -1000))
    assert isinstance(dec.m0, int) and isinstance(dec.m1, int)
    assert BinomialDecomposition(dec.m0, dec.m1).to_poly() == NumPoly(999, -1000)
