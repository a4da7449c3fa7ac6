from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crystalbench.ffgeom import RationalPoly, count_spaltenstein, interpolate
from crystalbench.ffgeom.checks import (InsufficientSamples, hall_check, mflag_check,
                                        orbit_check, primes_for, tensor_check)


def test_interpolate_examples():
    p = interpolate([(2, 3), (3, 4), (5, 6)])
    assert p.coeffs == (1, 1) and str(p) == "q + 1"
    c = interpolate([(2, 7), (3, 7), (5, 7)])
    assert c.degree == 0 and c.leading == 7


def test_interpolate_errors():
    with pytest.raises(ValueError):
        interpolate([(2, 1)])
    with pytest.raises(ValueError):
        interpolate([(2, 1), (2, 3)])


def test_zero_polynomial():
    z = interpolate([(2, 0), (3, 0)])
    assert z.is_zero() and z.degree is None and str(z) == "0"


def test_rational_coefficients():
    p = interpolate([(0, 0), (1, 1), (2, 3)])  # q(q+1)/2
    assert p.coeffs == (0, Fraction(1, 2), Fraction(1, 2))
    assert not p.has_integer_coefficients()
    assert p(4) == 10


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_interpolate_recovers_polynomial(coeffs):
    poly = RationalPoly(tuple(coeffs))
    samples = [(q, int(poly(q))) for q in (2, 3, 5, 7, 11, 13)]
    assert interpolate(samples) == poly


def test_pipeline_on_spaltenstein():
    samples = [(q, count_spaltenstein(((1, 0), (1, 0)), (2, 0), q)) for q in (2, 3, 5)]
    poly = interpolate(samples)
    assert str(poly) == "q + 1" and poly.degree == 1 and poly.leading == 1


def test_primes_for():
    assert primes_for(0) == [2, 3]
    assert primes_for(3, [2, 3, 5]) == [2, 3, 5, 7, 11]
    assert primes_for(1, [7, 11, 13]) == [7, 11, 13]


def test_hall_check_record():
    rec = hall_check((1, 0), (1, 0), (2, 0), 2, [2, 3, 5])
    assert rec["pass"] and rec["counts"] == {"2": 3, "3": 4, "5": 6}
    assert rec["predicted"] == {"degree": 1, "leading": 1}
    assert rec["observed"]["degree"] == 1
    rec = hall_check((1, 0), (1, 0), (1, 1), 2, [2, 3, 5])
    assert rec["pass"] and rec["observed"]["degree"] == 0


def test_hall_check_zero_case():
    rec = hall_check((2, 0, 0), (1, 1, 0), (2, 2, 0), 3)
    assert rec["pass"] and rec["predicted"]["leading"] == 0
    assert set(rec["counts"].values()) == {0}


def test_insufficient_samples():
    with pytest.raises(InsufficientSamples):
        hall_check((1, 0), (1, 0), (2, 0), 2, [2])
    with pytest.raises(ValueError):
        hall_check((1, 0), (1, 0), (2, 0), 2, [2, 2, 3])
    with pytest.raises(ValueError):
        hall_check((1, 0), (1, 0), (2, 0), 2, [2, 4, 5])


def test_other_checks():
    assert mflag_check((1, 1), (2, 0), 2)["pass"]
    assert tensor_check((1, 1), (1, 0), (1, 0), 2)["pass"]
    rec = orbit_check((1, 1))
    assert rec["pass"] and rec["polynomial"] == "q^2 - 1"
