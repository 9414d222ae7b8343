import math
from fractions import Fraction

import pytest
from sympy import Poly, Rational, symbols

import mahler
from errors import BadParams, CertificateFailure
from exactnum import Polynomial
from mahler import (
    MahlerCertificate,
    central_binomial_bound,
    k_threshold,
    mahler_coefficients,
    mahler_lower_bound,
    mahler_polynomial,
    mahler_polynomial_from_expansion,
    positivity_certificate,
    volume_product,
)


def test_low_dimensional_polynomials():
    assert mahler_polynomial(2) == Polynomial.of([0, 8, -8])
    assert mahler_polynomial(3) == Polynomial.of([8, 24, 0, -32])


@pytest.mark.parametrize("d", range(2, 41))
def test_coefficients_match_the_expansion(d):
    assert Polynomial(tuple(mahler_coefficients(d))) == mahler_polynomial_from_expansion(d)
    assert sum(mahler_coefficients(d)) == 0


@pytest.mark.parametrize("d", range(2, 13))
def test_polynomial_is_the_volume_product(d):
    p = mahler_polynomial(d)
    for x in (Fraction(1, 7), Fraction(2, 3), Fraction(19, 20)):
        assert p(x) == math.factorial(d) * volume_product(1, 1 - x, d) - 4**d


def test_coefficients_reject_small_d():
    with pytest.raises(BadParams):
        mahler_coefficients(1)


def test_volume_product():
    assert volume_product(2, 1, 3) == 4 * Fraction(10, 3)
    assert volume_product(2, 0, 3) == mahler_lower_bound(3)
    assert mahler_lower_bound(2) == 8


def test_volume_product_is_scale_invariant(random_ell_a):
    for _ in range(50):
        ell, a = random_ell_a()
        assert volume_product(ell, a, 5) == volume_product(3 * ell, 3 * a, 5)


@pytest.mark.parametrize("d", range(2, 21))
def test_cube_limit(d):
    assert volume_product(Fraction(7, 2), 0, d) == Fraction(4**d, math.factorial(d))


def test_mahler_inequality_on_random_parameters(rng, random_ell_a):
    for _ in range(200):
        ell, a = random_ell_a()
        d = rng.randint(2, 10)
        assert volume_product(ell, a, d) > mahler_lower_bound(d)


def test_product_approaches_the_bound_as_the_cant_vanishes():
    gaps = [volume_product(1, Fraction(1, 10**k), 6) - mahler_lower_bound(6) for k in range(1, 6)]
    assert all(gap > 0 for gap in gaps)
    assert gaps == sorted(gaps, reverse=True)


@pytest.mark.parametrize("d", range(3, 41))
def test_k_threshold(d):
    threshold = k_threshold(d)
    assert threshold == (3 * d - 1) // (d + 1)
    coefficients = mahler_coefficients(d)
    assert all(coefficients[k] >= 0 for k in range(1, threshold + 1))
    assert all(coefficients[k] < 0 for k in range(threshold + 1, d + 1))
    assert threshold == 2


def test_k_threshold_rejects_d2():
    with pytest.raises(BadParams):
        k_threshold(2)


@pytest.mark.parametrize("d", range(1, 65))
def test_central_binomial_bound(d):
    assert central_binomial_bound(d)


@pytest.mark.parametrize("d", range(2, 41))
def test_positivity_certificate(d):
    certificate = positivity_certificate(d)
    assert certificate.verdict
    assert certificate.failure is None
    assert certificate.value_at_one == 0
    assert certificate.sign_change_count == 1
    assert certificate.a0_case == ("zero_factorable" if d == 2 else "positive")


@pytest.mark.parametrize("d", [2, 3, 5, 8, 13, 21])
def test_single_positive_root_via_sympy(d):
    x = symbols("x")
    p = mahler_polynomial(d)
    _, cofactor = p.strip_x_power()
    expression = sum(int(c.numerator) * x**k / int(c.denominator) for k, c in enumerate(cofactor.coefficients))
    assert Poly(expression, x).count_roots(0, None) == 1
    assert Poly(expression, x).count_roots(Rational(1, 10**6), Rational(999999, 10**6)) == 0


def test_certificate_sign_patterns():
    assert positivity_certificate(2).sign_pattern() == "0+-"
    assert positivity_certificate(3).sign_pattern() == "++0-"
    assert positivity_certificate(3).k_threshold == 2
    assert positivity_certificate(2).k_threshold is None
    assert positivity_certificate(2).x_power == 1


def test_certificate_json_round_trip():
    certificate = positivity_certificate(7)
    payload = certificate.to_json()
    assert '"coefficients": ["' in payload
    restored = MahlerCertificate.from_json(payload)
    assert restored == certificate
    assert restored.polynomial == mahler_polynomial(7)


def test_non_strict_certificate_records_instead_of_raising(monkeypatch):
    real = mahler_coefficients(5)
    broken = [real[0], -real[1]] + real[2:]
    monkeypatch.setattr(mahler, "mahler_coefficients", lambda d: list(broken))

    certificate = positivity_certificate(5, strict=False)
    assert not certificate.verdict
    assert "disagrees" in certificate.failure
    assert certificate.coefficients == broken

    with pytest.raises(CertificateFailure, match="disagrees"):
        positivity_certificate(5)
    with pytest.raises(CertificateFailure, match="threshold"):
        k_threshold(5)
