"""
Mahler Volume Product and Positivity Certificate

For the isocanted family the volume product depends only on x = (ℓ−a)/ℓ ∈ (0,1], and

    p_d(x) := d!·vol(I_d)·vol(I_d°) − 4^d = Σ_k a_k x^k

with a_0 = 4d·C(2d−2,d−1) − 4^d, a_d = −2^{d+1}(d−1), and for 0 < k < d

    a_k = 2^{k+1}·(2d·C(2d−k−2, d−1) − (d−1)·C(2d−k−1, d−1))

The Mahler inequality on this family is p_d > 0 on (0,1). The certificate checks it
exactly: p_d(1) = 0, and after factoring out the power of x the cofactor has positive
constant term, negative leading term and exactly one sign change. By Descartes' rule
it then has exactly one positive root, which is x = 1.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import List, Optional, Union

from dataclasses_json import config, dataclass_json

from dualpoly import volume_primal_params
from errors import BadParams, CertificateFailure
from exactnum import Polynomial, binomial, format_rational, sign_changes, to_rational
from isocanted import IsocantedParams, volume

logger = getLogger("isocant:mahler")

PI_LOWER = Fraction(314159, 100000)

GRID_POINTS = 10
POSITIVITY_DENOMINATOR = 32


@dataclass_json
@dataclass
class MahlerCertificate:
    """
    Exact positivity certificate for p_d on (0,1).

    Attributes:
        d: dimension
        coefficients: a_0..a_d
        k_threshold: last index with a_k ≥ 0 (None for d = 2)
        x_power: multiplicity of the root x = 0
        sign_change_count: Descartes count of the cofactor
        value_at_one: p_d(1)
        a0_case: "positive" or "zero_factorable"
        verdict: whether every clause holds
        failure: the first failed clause, if any
    """

    d: int
    coefficients: List[Fraction] = field(
        metadata=config(
            encoder=lambda values: [format_rational(v) for v in values],
            decoder=lambda values: [Fraction(v) for v in values],
        )
    )
    k_threshold: Optional[int]
    x_power: int
    sign_change_count: int
    value_at_one: Fraction = field(metadata=config(encoder=format_rational, decoder=Fraction))
    a0_case: str
    verdict: bool
    failure: Optional[str] = None

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial(tuple(self.coefficients))

    def sign_pattern(self) -> str:
        return "".join("+" if c > 0 else "-" if c < 0 else "0" for c in self.coefficients)


def volume_product(ell: Union[int, str, Fraction], a: Union[int, str, Fraction], d: int) -> Fraction:
    """vol(I_d(ℓ,a))·vol(J_d); invariant under scaling (ℓ,a)."""
    return volume(IsocantedParams.of(d, ell, a)) * volume_primal_params(ell, a, d)


def mahler_lower_bound(d: int) -> Fraction:
    """4^d/d!, the volume product of the cube."""
    return Fraction(4**d, math.factorial(d))


def mahler_coefficients(d: int) -> List[Fraction]:
    if d < 2:
        raise BadParams(f"dimension must be ≥ 2, got d={d}")
    coefficients = [Fraction(4 * d * binomial(2 * d - 2, d - 1) - 4**d)]
    for k in range(1, d):
        coefficients.append(
            Fraction(
                2 ** (k + 1)
                * (2 * d * binomial(2 * d - k - 2, d - 1) - (d - 1) * binomial(2 * d - k - 1, d - 1))
            )
        )
    coefficients.append(Fraction(-(2 ** (d + 1)) * (d - 1)))
    return coefficients


def _product_at(x: Fraction, d: int) -> Fraction:
    return math.factorial(d) * volume_product(1, 1 - x, d) - 4**d


def _grid_disagreement(p: Polynomial, d: int) -> Optional[str]:
    for k in range(1, GRID_POINTS + 1):
        x = Fraction(k, GRID_POINTS)
        if p(x) != _product_at(x, d):
            return f"p_{d}({x}) = {p(x)} disagrees with the volume product {_product_at(x, d)}"
    return None


def mahler_polynomial(d: int) -> Polynomial:
    """
    p_d from the closed coefficient formulas, checked against the volume product on a grid.

    Args:
        d: dimension, at least 2

    Returns:
        The polynomial with p_d(x) = d!·P(1, 1−x) − 4^d.

    Raises:
        CertificateFailure: the coefficients disagree with the volume product.
    """
    p = Polynomial(tuple(mahler_coefficients(d)))
    failure = _grid_disagreement(p, d)
    if failure is not None:
        raise CertificateFailure(failure)
    return p


def mahler_polynomial_from_expansion(d: int) -> Polynomial:
    """2(d − (d−1)x)·Σ_{j<d} C(d+j−1, j)·2^{d−j}·x^{d−1−j} − 4^d."""
    if d < 2:
        raise BadParams(f"dimension must be ≥ 2, got d={d}")
    series = [Fraction(0)] * d
    for j in range(d):
        series[d - 1 - j] = Fraction(binomial(d + j - 1, j) * 2 ** (d - j))
    linear = Polynomial.of([2 * d, -2 * (d - 1)])
    return linear * Polynomial(tuple(series)) - Polynomial.of([4**d])


def _threshold_breach(coefficients: List[Fraction], threshold: int, d: int) -> Optional[str]:
    for k in range(1, d + 1):
        if (coefficients[k] >= 0) != (k <= threshold):
            return f"a_{k} = {coefficients[k]} breaks the sign threshold {threshold} at d={d}"
    return None


def k_threshold(d: int) -> int:
    """
    ⌊(3d−1)/(d+1)⌋: a_k ≥ 0 for 1 ≤ k ≤ threshold and a_k < 0 above it.

    Raises:
        BadParams: d < 3, where no threshold exists.
        CertificateFailure: a coefficient sits on the wrong side of the threshold.
    """
    if d < 3:
        raise BadParams(f"k threshold needs d ≥ 3, got d={d}")
    threshold = (3 * d - 1) // (d + 1)
    breach = _threshold_breach(mahler_coefficients(d), threshold, d)
    if breach is not None:
        raise CertificateFailure(breach)
    return threshold


def central_binomial_bound(d: int) -> bool:
    """C(2d−2,d−1)²·(d − 1/2)·π_lower ≥ 16^{d−1}, a rational sufficient form of the central bound."""
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    return binomial(2 * d - 2, d - 1) ** 2 * (d - Fraction(1, 2)) * PI_LOWER >= 16 ** (d - 1)


def positivity_certificate(d: int, strict: bool = True) -> MahlerCertificate:
    """
    Certify p_d > 0 on (0,1).

    Args:
        d: dimension, at least 2
        strict: raise on the first failed clause instead of recording it

    Returns:
        The certificate. Without `strict` a failed clause never raises: it is stored in
        `failure` and the verdict is false.

    Raises:
        BadParams: d < 2.
        CertificateFailure: only with `strict`, naming the first failed clause.
    """
    coefficients = mahler_coefficients(d)
    p = Polynomial(tuple(coefficients))
    x_power, cofactor = p.strip_x_power()
    changes = sign_changes(cofactor)
    at_one = p(1)
    threshold = (3 * d - 1) // (d + 1) if d >= 3 else None

    leading = p.coefficients[-1] if p.coefficients else Fraction(0)
    constant = cofactor.coefficients[0] if cofactor.coefficients else Fraction(0)
    failures = [
        _grid_disagreement(p, d),
        _threshold_breach(coefficients, threshold, d) if threshold is not None else None,
        None if at_one == 0 else f"p_{d}(1) = {at_one}, expected 0",
        None if constant > 0 else f"cofactor constant term {constant} is not positive",
        None if leading < 0 else f"leading coefficient {leading} is not negative",
        None if changes == 1 else f"cofactor has {changes} sign changes, expected 1",
    ]
    for k in range(1, POSITIVITY_DENOMINATOR):
        x = Fraction(k, POSITIVITY_DENOMINATOR)
        failures.append(None if p(x) > 0 else f"p_{d}({x}) = {p(x)} is not positive")

    failure = next((message for message in failures if message is not None), None)
    if failure is not None:
        logger.debug("certificate for d=%s failed: %s", d, failure)
        if strict:
            raise CertificateFailure(failure)

    return MahlerCertificate(
        d=d,
        coefficients=list(p.coefficients),
        k_threshold=threshold,
        x_power=x_power,
        sign_change_count=changes,
        value_at_one=to_rational(at_one),
        a0_case="positive" if x_power == 0 else "zero_factorable",
        verdict=failure is None,
        failure=failure,
    )
