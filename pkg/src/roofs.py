"""
Reference Volumes and Roofs

A roof is a prismatoid whose major base is the product of regular simplices
Δ_{V−1}(ℓ₁) × Δ_{C−1}(ℓ₁), whose crest is Δ_{V−1}(ℓ₂), and whose sections parallel to
the base are again products of simplices. Its dimension is V + C − 1. A roof is carried
around only as the descriptor (C, V, ℓ₁, ℓ₂, h); the section formula below is its defining
contract.

Writing t = s/h for the fraction of the height:

    secc(t) = √(CV/2^{d−1}) / ((C−1)!(V−1)!) · Σ_{n<V} C(V−1,n)·ℓ₁^{C−1+n}·ℓ₂^{V−1−n}·(1−t)^{C−1+n}·t^{V−1−n}

Integrating term by term with the beta integral gives the roof volume

    vol = (h/d!)·√(CV/2^{d−1}) · Σ_{n<V} C(C−1+n, n)·ℓ₁^{C−1+n}·ℓ₂^{V−1−n}

A point has volume 1 so pyramid and roof degenerations compose.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from errors import BadParams
from exactnum import Surd, beta_int, binomial, surd_sqrt, to_rational

Length = Union[Surd, Fraction, int]


@dataclass(frozen=True)
class RoofSpec:
    """
    Descriptor (C, V, ℓ₁, ℓ₂, h) of a roof of dimension V + C − 1.

    Attributes:
        C: simplex factor of the major base that collapses towards the crest
        V: simplex factor shared by base and crest
        ell1: base edge length
        ell2: crest edge length, 0 for an apex
        h: height

    The volume mixes the monomials ℓ₁^{C−1+n}·ℓ₂^{V−1−n}, so when V ≥ 2 and ℓ₂ ≠ 0 the
    two edge lengths must carry the same radicand to stay exact.
    """

    C: int
    V: int
    ell1: Surd
    ell2: Surd
    h: Surd

    def __post_init__(self) -> None:
        for name in ("ell1", "ell2", "h"):
            object.__setattr__(self, name, Surd.coerce(getattr(self, name)))
        if self.C < 1 or self.V < 1:
            raise BadParams(f"C ≥ 1 and V ≥ 1 violated: C={self.C}, V={self.V}")
        if self.ell1 <= 0 or self.ell2 < 0 or self.h <= 0:
            raise BadParams(
                f"ℓ₁ > 0, ℓ₂ ≥ 0, h > 0 violated: ℓ₁={self.ell1}, ℓ₂={self.ell2}, h={self.h}"
            )
        if self.V >= 2 and self.ell2 and self.ell1.radicand != self.ell2.radicand:
            raise BadParams(
                f"ℓ₁ and ℓ₂ need a common radicand: ℓ₁={self.ell1}, ℓ₂={self.ell2}; "
                "use roof_volume_numeric for unlike radicals"
            )

    @property
    def dimension(self) -> int:
        return self.V + self.C - 1


def simplex_volume(d: int, ell: Length) -> Surd:
    """Regular d-simplex of edge ℓ: √((d+1)/2^d)·ℓ^d/d!."""
    if d < 0:
        raise BadParams(f"dimension must be ≥ 0, got d={d}")
    return surd_sqrt(Fraction(d + 1, 2**d)) * Surd.coerce(ell) ** d / math.factorial(d)


def cross_polytope_volume(d: int, ell: Length) -> Surd:
    """Regular d-cross-polytope of edge ℓ: √(2^d)·ℓ^d/d!."""
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    return surd_sqrt(Fraction(2**d)) * Surd.coerce(ell) ** d / math.factorial(d)


def cube_volume(d: int, ell: Union[Fraction, int, str]) -> Fraction:
    return to_rational(ell) ** d


def pyramid_volume(base_volume: Length, height: Length, d: int) -> Surd:
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    return Surd.coerce(base_volume) * Surd.coerce(height) / d


def circumradius(d: int, ell: Length) -> Surd:
    """Circumradius of Δ_d(ℓ): √(d/(2(d+1)))·ℓ."""
    if d < 0:
        raise BadParams(f"dimension must be ≥ 0, got d={d}")
    return surd_sqrt(Fraction(d, 2 * (d + 1))) * Surd.coerce(ell)


def ell3(spec: RoofSpec) -> Surd:
    """Lateral edge length √(h² + r_{C−1}(ℓ₁)² + (r_{V−1}(ℓ₁) − r_{V−1}(ℓ₂))²)."""
    offset = circumradius(spec.V - 1, spec.ell1) - circumradius(spec.V - 1, spec.ell2)
    squared = spec.h.square() + circumradius(spec.C - 1, spec.ell1).square() + offset.square()
    return surd_sqrt(squared)


def _section_prefactor(spec: RoofSpec) -> Surd:
    return surd_sqrt(Fraction(spec.C * spec.V, 2 ** (spec.dimension - 1)))


def section_volume(spec: RoofSpec, t: Union[Fraction, int, str]) -> Surd:
    """(d−1)-volume of the section at height s = t·h, 0 ≤ t ≤ 1."""
    t = to_rational(t)
    if not 0 <= t <= 1:
        raise BadParams(f"0 ≤ s/h ≤ 1 violated: s/h={t}")
    C, V = spec.C, spec.V
    total = Surd(0)
    for n in range(V):
        weight = binomial(V - 1, n) * (1 - t) ** (C - 1 + n) * t ** (V - 1 - n)
        if weight:
            total = total + spec.ell1 ** (C - 1 + n) * spec.ell2 ** (V - 1 - n) * weight
    scale = Fraction(1, math.factorial(C - 1) * math.factorial(V - 1))
    return _section_prefactor(spec) * total * scale


def section_integral(spec: RoofSpec) -> Surd:
    """∫₀^h secc(s) ds, integrated term by term: ∫₀¹ (1−t)^j t^k dt = β(j+1, k+1)."""
    C, V = spec.C, spec.V
    total = Surd(0)
    for n in range(V):
        weight = binomial(V - 1, n) * beta_int(C - 1 + n, V - 1 - n)
        total = total + spec.ell1 ** (C - 1 + n) * spec.ell2 ** (V - 1 - n) * weight
    scale = Fraction(1, math.factorial(C - 1) * math.factorial(V - 1))
    return spec.h * _section_prefactor(spec) * total * scale


def roof_volume(spec: RoofSpec) -> Surd:
    """
    Exact roof volume.

    Args:
        spec: the roof; ℓ₁ and ℓ₂ share a radicand

    Returns:
        h·κ·Σ_{n<V} C(C−1+n, n)·ℓ₁^{C−1+n}·ℓ₂^{V−1−n} / (C+V−1)!, with κ the section
        prefactor.
    """
    C, V = spec.C, spec.V
    total = Surd(0)
    for n in range(V):
        total = total + spec.ell1 ** (C - 1 + n) * spec.ell2 ** (V - 1 - n) * binomial(C - 1 + n, n)
    return spec.h * _section_prefactor(spec) * total / math.factorial(spec.dimension)


def roof_volume_numeric(C: int, V: int, ell1: float, ell2: float, h: float) -> float:
    """Roof volume for real lengths (fourth roots and the like), at 40 digits."""
    with mpmath.workdps(40):
        d = V + C - 1
        prefactor = mpmath.sqrt(mpmath.mpf(C * V) / 2 ** (d - 1))
        total = mpmath.fsum(
            binomial(C - 1 + n, n) * mpmath.mpf(ell1) ** (C - 1 + n) * mpmath.mpf(ell2) ** (V - 1 - n)
            for n in range(V)
        )
        return float(mpmath.mpf(h) * prefactor * total / mpmath.factorial(d))


def major_base_volume(spec: RoofSpec) -> Surd:
    return simplex_volume(spec.V - 1, spec.ell1) * simplex_volume(spec.C - 1, spec.ell1)


def crest_volume(spec: RoofSpec) -> Surd:
    return simplex_volume(spec.V - 1, spec.ell2)


def frustum_volume_egyptian(
    a: Union[Fraction, int, str], b: Union[Fraction, int, str], h: Union[Fraction, int, str]
) -> Fraction:
    """Square frustum with base sides a, b and height h: h(a²+ab+b²)/3."""
    a, b, h = to_rational(a), to_rational(b), to_rational(h)
    if a < 0 or b < 0 or h <= 0:
        raise BadParams(f"a, b ≥ 0 and h > 0 violated: a={a}, b={b}, h={h}")
    return h * (a * a + a * b + b * b) / 3


def frustum_volume_from_areas(area1: Length, area2: Length, h: Length) -> Surd:
    """h(A₁ + √(A₁A₂) + A₂)/3 for similar parallel bases of areas A₁, A₂."""
    area1, area2, h = Surd.coerce(area1), Surd.coerce(area2), Surd.coerce(h)
    if area1 < 0 or area2 < 0 or h <= 0:
        raise BadParams(f"A₁, A₂ ≥ 0 and h > 0 violated: A₁={area1}, A₂={area2}, h={h}")
    mean = surd_sqrt((area1 * area2).to_rational())
    return h * (area1 + mean + area2) / 3
