"""
Isocanted Cube I_d(ℓ,a)

The cube [−ℓ/2, ℓ/2]^d with every edge direction e_j − e_k bevelled to depth a:

    −ℓ/2 ≤ x_j ≤ ℓ/2            for all j
    a − ℓ ≤ x_j − x_k ≤ ℓ − a   for all j ≠ k

It is the zonotope Σ_i [−y_i, y_i] with y_i = (ℓ−a)e_i/2 for i ≤ d and
y_{d+1} = a(1,…,1)/2, and its volume is the determinant of the Bose matrix,
(ℓ−a)^{d−1}(ℓ+(d−1)a).

Vertices are indexed by nonempty subsets I ⊆ [d]: v_I carries ℓ/2 on I and a−ℓ/2 on
the complement, and −v_I is its antipode. Under polarity the vertex v_I is the facet
(I, −) of the dual body and −v_I is (I, +), so each vertex gets a label W ⊂ [d]∪{0}
and touches |W|·(d+1−|W|) facets.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from typing import FrozenSet, Iterator, Sequence, Tuple, Union

import numpy as np

from config import Config
from errors import BadParams, DimensionMismatch, DimensionTooLarge
from exactnum import Point, binomial, to_rational
from structmat import bose, sm_det

logger = getLogger("isocant:isocanted")


@dataclass(frozen=True)
class IsocantedParams:
    """(d, ℓ, a) with d ≥ 2 and 0 ≤ a < ℓ; a = 0 is the cube."""

    d: int
    ell: Fraction
    a: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "ell", to_rational(self.ell))
        object.__setattr__(self, "a", to_rational(self.a))
        if self.d < 2:
            raise BadParams(f"dimension must be ≥ 2, got d={self.d}")
        if self.ell <= 0:
            raise BadParams(f"ℓ > 0 violated: ℓ={self.ell}")
        if not 0 <= self.a < self.ell:
            raise BadParams(f"0 ≤ a < ℓ violated: a={self.a}, ℓ={self.ell}")

    @classmethod
    def of(
        cls, d: int, ell: Union[int, str, Fraction], a: Union[int, str, Fraction]
    ) -> "IsocantedParams":
        return cls(d, to_rational(ell), to_rational(a))


@dataclass(frozen=True)
class Halfspace:
    """⟨normal, x⟩ ≤ offset."""

    normal: Point
    offset: Fraction

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((n * x for n, x in zip(self.normal, point) if n), Fraction(0))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) <= self.offset

    def tight_at(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) == self.offset


@dataclass(frozen=True)
class HalfspaceSystem:
    d: int
    halfspaces: Tuple[Halfspace, ...]

    def __post_init__(self) -> None:
        for halfspace in self.halfspaces:
            if len(halfspace.normal) != self.d:
                raise DimensionMismatch(
                    f"normal of dimension {len(halfspace.normal)} in a system of dimension {self.d}"
                )
            if not any(halfspace.normal):
                raise BadParams("halfspace with a zero normal")

    def __len__(self) -> int:
        return len(self.halfspaces)

    def __iter__(self) -> Iterator[Halfspace]:
        return iter(self.halfspaces)

    def _check_dimension(self, point: Sequence[Fraction]) -> None:
        if len(point) != self.d:
            raise DimensionMismatch(f"point of dimension {len(point)}, expected {self.d}")

    def contains(self, point: Sequence[Fraction]) -> bool:
        self._check_dimension(point)
        return all(h.satisfied_by(point) for h in self.halfspaces)

    def tight_count(self, point: Sequence[Fraction]) -> int:
        self._check_dimension(point)
        return sum(1 for h in self.halfspaces if h.tight_at(point))

    def to_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Float images (A, b) of the system A·x ≤ b, for vectorized sampling and LPs."""
        normals = np.array([[float(n) for n in h.normal] for h in self.halfspaces], dtype=np.float64)
        offsets = np.array([float(h.offset) for h in self.halfspaces], dtype=np.float64)
        return normals, offsets


@dataclass(frozen=True)
class GeneratorSet:
    """Half-generators y_i of the zonotope Σ_i [−y_i, y_i]."""

    d: int
    generators: Tuple[Point, ...]

    def __post_init__(self) -> None:
        for generator in self.generators:
            if len(generator) != self.d:
                raise DimensionMismatch(f"generator of dimension {len(generator)}, expected {self.d}")

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.generators)


def _unit(d: int, j: int, scale: Fraction = Fraction(1)) -> Point:
    return tuple(scale if k == j else Fraction(0) for k in range(d))


@lru_cache(maxsize=256)
def halfspaces(p: IsocantedParams) -> HalfspaceSystem:
    """The d² + d inequalities: 2d box bounds, then both signs of each x_j − x_k."""
    d, half, gap = p.d, p.ell / 2, p.ell - p.a
    rows = []
    for j in range(d):
        rows.append(Halfspace(_unit(d, j), half))
        rows.append(Halfspace(_unit(d, j, Fraction(-1)), half))
    for j in range(d):
        for k in range(j + 1, d):
            difference = tuple(
                Fraction(1) if i == j else Fraction(-1) if i == k else Fraction(0) for i in range(d)
            )
            rows.append(Halfspace(difference, gap))
            rows.append(Halfspace(tuple(-x for x in difference), gap))
    return HalfspaceSystem(d, tuple(rows))


def generators(p: IsocantedParams) -> GeneratorSet:
    """Half-generators ((ℓ−a)/2)·e_i and the diagonal (a/2)·1."""
    d = p.d
    gens = [_unit(d, i, (p.ell - p.a) / 2) for i in range(d)]
    gens.append(tuple(p.a / 2 for _ in range(d)))
    return GeneratorSet(d, tuple(gens))


def subset_vertex(p: IsocantedParams, mask: int) -> Point:
    """v_I for the subset I encoded by bit j ↔ coordinate j."""
    high, low = p.ell / 2, p.a - p.ell / 2
    return tuple(high if mask >> j & 1 else low for j in range(p.d))


def vertices(p: IsocantedParams) -> Tuple[Point, ...]:
    """The 2^{d+1}−2 vertices ±v_I, I ≠ ∅, in mask order with each antipode after its vertex."""
    if p.a == 0:
        raise BadParams("0 < a < ℓ violated: vertex enumeration needs a > 0")
    if p.d > Config.VERTEX_DIMENSION_CAP:
        raise DimensionTooLarge(
            f"vertex enumeration capped at d={Config.VERTEX_DIMENSION_CAP}, got d={p.d}"
        )
    logger.debug("enumerating %s vertices of I_%s", 2 ** (p.d + 1) - 2, p.d)
    points = []
    for mask in range(1, 2**p.d):
        vertex = subset_vertex(p, mask)
        points.append(vertex)
        points.append(tuple(-x for x in vertex))
    return tuple(points)


def contains(p: IsocantedParams, x: Sequence[Fraction]) -> bool:
    """
    Exact membership test.

    Args:
        p: the body I_d(ℓ,a)
        x: point with d coordinates; ints and strings are accepted

    Returns:
        True when x satisfies all d² + d inequalities, boundary included.
    """
    return halfspaces(p).contains(tuple(to_rational(v) for v in x))


def volume(p: IsocantedParams) -> Fraction:
    """
    Exact volume of I_d(ℓ,a).

    Args:
        p: validated parameters, 0 ≤ a < ℓ

    Returns:
        (ℓ−a)^{d−1}·(ℓ+(d−1)a).
    """
    return (p.ell - p.a) ** (p.d - 1) * (p.ell + (p.d - 1) * p.a)


def volume_expanded(p: IsocantedParams) -> Fraction:
    """(ℓ−a)^d + d·a·(ℓ−a)^{d−1}."""
    return (p.ell - p.a) ** p.d + p.d * p.a * (p.ell - p.a) ** (p.d - 1)


def bose_volume(p: IsocantedParams) -> Fraction:
    return abs(sm_det(bose(p.ell, p.a, p.d)))


def meeting_probability(d: int, wait: Union[int, str, Fraction]) -> Fraction:
    """
    Probability that d people arriving uniformly in a unit interval, each staying for
    a fraction `wait` of it, are all present at once: the volume of I_d(1, 1−wait).
    """
    wait = to_rational(wait)
    if not 0 < wait <= 1:
        raise BadParams(f"0 < wait ≤ 1 violated: wait={wait}")
    return volume(IsocantedParams(d, Fraction(1), 1 - wait))


def vertex_label(p: IsocantedParams, v: Sequence[Fraction]) -> FrozenSet[int]:
    """
    The subset W ⊂ [d]∪{0} naming the polar facet of v: W = I for v_I and
    W = I^∁ ∪ {0} for −v_I.
    """
    if p.a == 0:
        raise BadParams("0 < a < ℓ violated: vertex labels need a > 0")
    if len(v) != p.d:
        raise DimensionMismatch(f"point of dimension {len(v)}, expected {p.d}")
    point = tuple(to_rational(x) for x in v)
    high, low = p.ell / 2, p.a - p.ell / 2
    if all(x in (high, low) for x in point) and high in point:
        return frozenset(j + 1 for j, x in enumerate(point) if x == high)
    if all(x in (-high, -low) for x in point) and -high in point:
        return frozenset([0] + [j + 1 for j, x in enumerate(point) if x == -low])
    raise BadParams(f"{point} is not a vertex of I_{p.d}({p.ell},{p.a})")


def vertex_valency(p: IsocantedParams, v: Sequence[Fraction]) -> int:
    """Number of facets of I_d(ℓ,a) through v."""
    return halfspaces(p).tight_count(tuple(to_rational(x) for x in v))


def f_vector(d: int) -> Tuple[int, ...]:
    """f_k = (2^{d+1−k} − 2)·C(d+1, k) for k = 0..d−1."""
    if d < 2:
        raise BadParams(f"dimension must be ≥ 2, got d={d}")
    return tuple((2 ** (d + 1 - k) - 2) * binomial(d + 1, k) for k in range(d))
