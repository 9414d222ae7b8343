"""
Exact Scalar Tower

Everything in isocant computes over exact scalars:

- Rational: fractions.Fraction, normalized eagerly (gcd 1, positive denominator)
- Surd: q·√n with q rational and n a squarefree positive integer; carries the
  radical-bearing lengths and heights until they cancel
- Polynomial: dense univariate polynomials with rational coefficients

Serialization: rationals print as "num/den" (den omitted when 1), surds as
"num/den*sqrt(n)".
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Tuple, Union

import mpmath
from sympy import factorint

from errors import BadParams, IncompatibleRadicands, RadicandOverflow

Rational = Fraction
Point = Tuple[Fraction, ...]

RADICAND_LIMIT = 2**63

_SURD_PATTERN = re.compile(
    r"^\s*(?:(?P<coef>[+-]?\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<rad>\d+)\s*\)\s*$"
)


def to_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce an int, Fraction or "p/q" / decimal string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise BadParams(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise BadParams(f"not a rational: {value!r}") from e
    raise BadParams(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 outside 0 <= k <= n."""
    if n < 0:
        raise BadParams(f"binomial needs n ≥ 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def beta_int(j: int, k: int) -> Fraction:
    """β(j+1, k+1) = j!·k!/(j+k+1)!, the integral of (1−t)^j t^k over [0,1]."""
    if j < 0 or k < 0:
        raise BadParams(f"beta_int needs j, k ≥ 0, got ({j}, {k})")
    return Fraction(math.factorial(j) * math.factorial(k), math.factorial(j + k + 1))


def beta_int_alternating(j: int, k: int) -> Fraction:
    """Same value through the alternating sum Σ_n C(j,n)(−1)^n/(k+n+1)."""
    return sum(
        (Fraction((-1) ** n * binomial(j, n), k + n + 1) for n in range(j + 1)), Fraction(0)
    )


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> Tuple[int, int]:
    """Write n = s²·m with m squarefree; returns (s, m)."""
    if n <= 0:
        raise BadParams(f"radicand must be positive, got {n}")
    if n >= RADICAND_LIMIT:
        raise RadicandOverflow(f"radicand {n} exceeds 2^63")
    outside, inside = 1, 1
    for prime, power in factorint(n).items():
        outside *= prime ** (power // 2)
        if power % 2:
            inside *= prime
    return int(outside), int(inside)


@dataclass(frozen=True)
class Surd:
    """
    Exact value coefficient·√radicand.

    The radicand is kept squarefree and the zero surd always has radicand 1, so
    dataclass equality is value equality.
    """

    coefficient: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        coefficient = to_rational(self.coefficient)
        radicand = int(self.radicand)
        if coefficient == 0:
            radicand = 1
        elif radicand != 1:
            outside, radicand = squarefree_split(radicand)
            coefficient *= outside
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "radicand", radicand)

    @classmethod
    def coerce(cls, value: Union["Surd", Fraction, int, str]) -> "Surd":
        if isinstance(value, Surd):
            return value
        if isinstance(value, str):
            parsed = parse_scalar(value)
            return parsed if isinstance(parsed, Surd) else cls(parsed)
        return cls(to_rational(value))

    @classmethod
    def sqrt(cls, value: Union[Fraction, int]) -> "Surd":
        return surd_sqrt(to_rational(value))

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def to_rational(self) -> Fraction:
        if self.radicand != 1:
            raise IncompatibleRadicands(f"{self} is irrational")
        return self.coefficient

    def square(self) -> Fraction:
        return self.coefficient * self.coefficient * self.radicand

    def sign(self) -> int:
        return (self.coefficient > 0) - (self.coefficient < 0)

    def __mul__(self, other: object) -> "Surd":
        if not isinstance(other, (Surd, Fraction, int)):
            return NotImplemented
        return surd_mul(self, Surd.coerce(other))

    __rmul__ = __mul__

    def __add__(self, other: object) -> "Surd":
        if not isinstance(other, (Surd, Fraction, int)):
            return NotImplemented
        return surd_add(self, Surd.coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.coefficient, self.radicand)

    def __sub__(self, other: object) -> "Surd":
        if not isinstance(other, (Surd, Fraction, int)):
            return NotImplemented
        return surd_add(self, -Surd.coerce(other))

    def __rsub__(self, other: object) -> "Surd":
        if not isinstance(other, (Fraction, int)):
            return NotImplemented
        return surd_add(Surd.coerce(other), -self)

    def inverse(self) -> "Surd":
        if self.coefficient == 0:
            raise ZeroDivisionError("inverse of the zero surd")
        # 1/(q√n) = √n/(q·n)
        return Surd(1 / (self.coefficient * self.radicand), self.radicand)

    def __truediv__(self, other: object) -> "Surd":
        if not isinstance(other, (Surd, Fraction, int)):
            return NotImplemented
        return self * Surd.coerce(other).inverse()

    def __rtruediv__(self, other: object) -> "Surd":
        if not isinstance(other, (Fraction, int)):
            return NotImplemented
        return Surd.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Surd":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        half, odd = divmod(exponent, 2)
        even_part = self.square() ** half
        return Surd(even_part * self.coefficient, self.radicand) if odd else Surd(even_part)

    def _compare(self, other: Union["Surd", Fraction, int]) -> int:
        other = Surd.coerce(other)
        left, right = self.sign(), other.sign()
        if left != right:
            return (left > right) - (left < right)
        magnitude = (self.square() > other.square()) - (self.square() < other.square())
        return magnitude * left

    def __lt__(self, other: Union["Surd", Fraction, int]) -> bool:
        return self._compare(other) < 0

    def __le__(self, other: Union["Surd", Fraction, int]) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other: Union["Surd", Fraction, int]) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other: Union["Surd", Fraction, int]) -> bool:
        return self._compare(other) >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Fraction, int)) and not isinstance(other, bool):
            return self.radicand == 1 and self.coefficient == other
        if not isinstance(other, Surd):
            return NotImplemented
        return self.coefficient == other.coefficient and self.radicand == other.radicand

    def __hash__(self) -> int:
        if self.radicand == 1:
            return hash(self.coefficient)
        return hash((self.coefficient, self.radicand))

    def __bool__(self) -> bool:
        return self.coefficient != 0

    def __float__(self) -> float:
        with mpmath.workdps(40):
            value = (
                mpmath.mpf(self.coefficient.numerator)
                / self.coefficient.denominator
                * mpmath.sqrt(self.radicand)
            )
            return float(value)

    def __str__(self) -> str:
        if self.radicand == 1:
            return format_rational(self.coefficient)
        return f"{format_rational(self.coefficient)}*sqrt({self.radicand})"


Scalar = Union[Fraction, Surd]


def surd_mul(x: Surd, y: Surd) -> Surd:
    """
    Product of two surds; radicands multiply and are reduced back to squarefree form.

    Args:
        x: left factor
        y: right factor

    Returns:
        x·y as a surd.
    """
    return Surd(x.coefficient * y.coefficient, x.radicand * y.radicand)


def surd_add(x: Surd, y: Surd) -> Surd:
    """
    Sum of two like surds.

    Args:
        x: left summand
        y: right summand

    Returns:
        x + y. A zero summand returns the other one unchanged.

    Raises:
        IncompatibleRadicands: both are nonzero with different radicands.
    """
    if x.coefficient == 0:
        return y
    if y.coefficient == 0:
        return x
    if x.radicand != y.radicand:
        raise IncompatibleRadicands(f"cannot add {x} and {y}")
    return Surd(x.coefficient + y.coefficient, x.radicand)


def surd_sqrt(value: Fraction) -> Surd:
    """√(p/q) normalized as √(p·q)/q."""
    value = to_rational(value)
    if value < 0:
        raise BadParams(f"square root of negative rational {value}")
    if value == 0:
        return Surd(0)
    return Surd(Fraction(1, value.denominator), value.numerator * value.denominator)


def parse_scalar(text: str) -> Scalar:
    """Inverse of format_scalar: "3/4" → Fraction, "3/4*sqrt(2)" → Surd."""
    match = _SURD_PATTERN.match(text)
    if match:
        coefficient = to_rational(match.group("coef") or "1")
        return Surd(coefficient, int(match.group("rad")))
    return to_rational(text)


def format_scalar(value: Union[Scalar, int]) -> str:
    if isinstance(value, Surd):
        return str(value)
    return format_rational(to_rational(value))


def decimal_image(value: Union[Scalar, int]) -> Optional[float]:
    """
    Nearest double to an exact scalar.

    Args:
        value: rational or surd

    Returns:
        The float, or None when the value lies beyond the double range.
    """
    image = float(Surd.coerce(value))
    return image if math.isfinite(image) else None


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coefficients[k] multiplies x^k, trailing zeros trimmed."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coefficients = [to_rational(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, coefficients: Iterable[Union[int, Fraction]]) -> "Polynomial":
        return cls(tuple(to_rational(c) for c in coefficients))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; −1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        return poly_eval(self, to_rational(x))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        padded = [
            (self.coefficients[k] if k < len(self.coefficients) else Fraction(0))
            + (other.coefficients[k] if k < len(other.coefficients) else Fraction(0))
            for k in range(size)
        ]
        return Polynomial(tuple(padded))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Fraction, int]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return Polynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                product[i + j] += x * y
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def strip_x_power(self) -> Tuple[int, "Polynomial"]:
        """Factor out x^m; returns (m, cofactor) with cofactor(0) != 0."""
        m = 0
        while m < len(self.coefficients) and self.coefficients[m] == 0:
            m += 1
        return m, Polynomial(self.coefficients[m:])

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.coefficients)


def poly_eval(p: Polynomial, x: Fraction) -> Fraction:
    """
    Horner evaluation.

    Args:
        p: polynomial with rational coefficients
        x: evaluation point

    Returns:
        p(x), exactly.
    """
    result = Fraction(0)
    for coefficient in reversed(p.coefficients):
        result = result * x + coefficient
    return result


def sign_changes(p: Polynomial) -> int:
    """Descartes count: sign changes between consecutive nonzero coefficients."""
    signs = [1 if c > 0 else -1 for c in p.coefficients if c != 0]
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


# Identities used by the closed forms


def companion_binomial_sum(d: int) -> Fraction:
    """Σ_{j<d} C(d+j−1, j)/2^j, equal to 2^{d−1}."""
    return sum((Fraction(binomial(d + j - 1, j), 2**j) for j in range(d)), Fraction(0))


def hockey_stick_sum(d: int) -> int:
    """2·Σ_{j<d} C(d+j−1, j), equal to C(2d, d)."""
    return 2 * sum(binomial(d + j - 1, j) for j in range(d))


def vandermonde_sum(d: int, r: int, j: int) -> int:
    """Σ_n C(d, j−n)·C(r, n), equal to C(d+r, j)."""
    return sum(binomial(d, j - n) * binomial(r, n) for n in range(min(r, j) + 1) if j - n <= d)


def gould_power_sum(n: int) -> int:
    """Σ_{k=0}^{n} C(2n−k, n)·2^k, equal to 4^n."""
    return sum(binomial(2 * n - k, n) * 2**k for k in range(n + 1))
