"""
Polar Dual J_d(b,c) = I_d°(ℓ,a)

With b = 1/(ℓ−a) and c = 2/ℓ the polar body is the convex hull of the (d+1)d molecules

    m_{i,0} = c·e_i,   m_{0,j} = −c·e_j,   m_{i,j} = b(e_i − e_j)   (i, j ∈ [d], i ≠ j)

Facets come in two kinds, all identified by a nonempty subset I ⊆ [d] and a sign:

- extraordinary (I = [d]): the simplices on Σx_i = ∓c
- ordinary (I proper): b·Σ_{i∈I} x_i + (b−c)·Σ_{j∉I} x_j = ∓bc

The "+" facet lies on the negative-offset hyperplane. The vertices of the facet (I, +) are
P_{I,+} = {m_{j,i} : i ∈ I, j ∈ I^∁ ∪ {0}} and (I, −) is its negation.

Every ordinary facet is a roof, so the volume splits into pyramids over the facets with
apex at the origin. All radicals in the roof volumes and apex heights cancel, which leaves

    vol J_d = (2/d!)·Σ_{j<d} C(d+j−1, j)·b^j·c^{d−j}

Finally, J_d is the unit ball of the Lipschitz-free space over the pointed metric space
[d]∪{0} with d(i,j) = ℓ−a and d(0,j) = ℓ/2, and this module carries that construction too.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from logging import getLogger
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple, Union

from config import Config
from errors import BadFacet, BadParams, DimensionMismatch, DimensionTooLarge
from exactnum import Point, Surd, binomial, surd_sqrt, to_rational
from isocanted import Halfspace, HalfspaceSystem, IsocantedParams
from roofs import RoofSpec, roof_volume

logger = getLogger("isocant:dualpoly")

Metric = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class DualParams:
    d: int
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", to_rational(self.b))
        object.__setattr__(self, "c", to_rational(self.c))
        if self.d < 2:
            raise BadParams(f"dimension must be ≥ 2, got d={self.d}")
        if self.b <= 0 or self.c <= 0:
            raise BadParams(f"b > 0 and c > 0 violated: b={self.b}, c={self.c}")

    @classmethod
    def of(cls, d: int, b: Union[int, str, Fraction], c: Union[int, str, Fraction]) -> "DualParams":
        return cls(d, to_rational(b), to_rational(c))


@dataclass(frozen=True)
class Molecule:
    """Vertex m_{i,j} of J_d; index 0 is the marked point."""

    i: int
    j: int
    point: Point

    def __str__(self) -> str:
        return f"m_{{{self.i},{self.j}}}"


@dataclass(frozen=True)
class FacetId:
    """Facet (I, sign) with I a nonempty subset of [d] as a bitmask (bit k ↔ index k+1)."""

    mask: int
    sign: int

    @classmethod
    def of(cls, subset: Iterable[int], sign: int) -> "FacetId":
        mask = 0
        for index in subset:
            if index < 1:
                raise BadFacet(f"facet subsets live in [d], got index {index}")
            mask |= 1 << (index - 1)
        return cls(mask, sign)

    @property
    def subset(self) -> FrozenSet[int]:
        return frozenset(k + 1 for k in range(self.mask.bit_length()) if self.mask >> k & 1)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def is_extraordinary(self, d: int) -> bool:
        return self.mask == (1 << d) - 1

    def __str__(self) -> str:
        members = ",".join(str(k) for k in sorted(self.subset))
        return f"{'+' if self.sign > 0 else '-'}{{{members}}}"


@dataclass(frozen=True)
class FacetHyperplane:
    """⟨normal, x⟩ = offset."""

    normal: Point
    offset: Fraction


def from_primal(ell: Union[int, str, Fraction], a: Union[int, str, Fraction], d: int) -> DualParams:
    """b = 1/(ℓ−a), c = 2/ℓ."""
    p = IsocantedParams.of(d, ell, a)
    return DualParams(d, 1 / (p.ell - p.a), 2 / p.ell)


def to_primal(b: Union[int, str, Fraction], c: Union[int, str, Fraction]) -> Tuple[Fraction, Fraction]:
    """ℓ = 2/c, a = (2b−c)/(bc); needs b ≥ c/2 > 0."""
    b, c = to_rational(b), to_rational(c)
    if not (c > 0 and b >= c / 2):
        raise BadParams(f"b ≥ c/2 > 0 violated: b={b}, c={c}")
    return 2 / c, (2 * b - c) / (b * c)


def _check_facet(d: int, facet: FacetId) -> None:
    if facet.sign not in (1, -1):
        raise BadFacet(f"facet sign must be ±1, got {facet.sign}")
    if not 0 < facet.mask < 1 << d:
        raise BadFacet(f"facet subset must be a nonempty subset of [{d}], got mask {facet.mask:#b}")


def _check_enumeration(d: int) -> None:
    if d > Config.FACET_DIMENSION_CAP:
        raise DimensionTooLarge(f"facet enumeration capped at d={Config.FACET_DIMENSION_CAP}, got d={d}")


def molecule(p: DualParams, i: int, j: int) -> Molecule:
    """
    Vertex m_{i,j} of J_d(b,c).

    Args:
        p: dual parameters
        i: index in [0, d]
        j: index in [0, d], distinct from i

    Returns:
        b(e_i − e_j) for i, j ≥ 1; c·e_i when j = 0; −c·e_j when i = 0.

    Raises:
        BadParams: an index is out of range or i = j.
    """
    if not (0 <= i <= p.d and 0 <= j <= p.d) or i == j:
        raise BadParams(f"molecule indices must be distinct in [0,{p.d}], got ({i},{j})")
    point = [Fraction(0)] * p.d
    if j == 0:
        point[i - 1] = p.c
    elif i == 0:
        point[j - 1] = -p.c
    else:
        point[i - 1], point[j - 1] = p.b, -p.b
    return Molecule(i, j, tuple(point))


def molecules(p: DualParams) -> Tuple[Molecule, ...]:
    return tuple(molecule(p, i, j) for i in range(p.d + 1) for j in range(p.d + 1) if i != j)


def molecule_distance(m1: Molecule, m2: Molecule) -> Surd:
    if len(m1.point) != len(m2.point):
        raise DimensionMismatch(f"molecules of dimension {len(m1.point)} and {len(m2.point)}")
    return surd_sqrt(sum(((x - y) ** 2 for x, y in zip(m1.point, m2.point)), Fraction(0)))


def tabulated_distance(p: DualParams, m1: Molecule, m2: Molecule) -> Surd:
    """
    Distance between molecules read off their index pattern alone.

    Antipodal pairs m_{i,j}, m_{j,i} without the marked point sit 2√2·b apart.
    """
    b, c = p.b, p.c
    i, j, r, t = m1.i, m1.j, m2.i, m2.j
    if (i, j) == (r, t):
        return Surd(0)
    marked = 0 in (i, j, r, t)
    if (i, j) == (t, r):
        squared = 4 * c * c if marked else 8 * b * b
    elif i == r or j == t:
        shared = i if i == r else j
        if shared == 0:
            squared = 2 * c * c
        elif marked:
            squared = b * b + (b - c) ** 2
        else:
            squared = 2 * b * b
    elif i == t or j == r:
        link = i if i == t else j
        if link == 0:
            squared = 2 * c * c
        elif marked:
            squared = b * b + (b + c) ** 2
        else:
            squared = 6 * b * b
    else:
        squared = 2 * b * b + c * c if marked else 4 * b * b
    return surd_sqrt(squared)


def f_vector(d: int) -> Tuple[int, ...]:
    """f_k = (2^{k+2} − 2)·C(d+1, k+2) for k = 0..d−1."""
    if d < 2:
        raise BadParams(f"dimension must be ≥ 2, got d={d}")
    return tuple((2 ** (k + 2) - 2) * binomial(d + 1, k + 2) for k in range(d))


def facet_ids(d: int) -> Tuple[FacetId, ...]:
    if d < 2:
        raise BadParams(f"dimension must be ≥ 2, got d={d}")
    _check_enumeration(d)
    return tuple(FacetId(mask, sign) for mask in range(1, 1 << d) for sign in (1, -1))


def facet_hyperplane(p: DualParams, facet: FacetId) -> FacetHyperplane:
    """
    Supporting hyperplane of one facet, as normal·x = offset.

    Args:
        p: dual parameters
        facet: a subset I with a sign; I = [d] is extraordinary

    Returns:
        Normal 1 with offset ∓c when extraordinary. Otherwise the normal has b on I and
        b − c off it, with offset ∓bc.
    """
    _check_facet(p.d, facet)
    if facet.is_extraordinary(p.d):
        return FacetHyperplane(tuple(Fraction(1) for _ in range(p.d)), -facet.sign * p.c)
    normal = tuple(p.b if facet.mask >> k & 1 else p.b - p.c for k in range(p.d))
    return FacetHyperplane(normal, -facet.sign * p.b * p.c)


def facet_hyperplanes(p: DualParams) -> Dict[FacetId, FacetHyperplane]:
    return {facet: facet_hyperplane(p, facet) for facet in facet_ids(p.d)}


def facet_vertices(p: DualParams, facet: FacetId) -> Tuple[Molecule, ...]:
    """P_{I,+} = {m_{j,i} : i ∈ I, j ∈ I^∁ ∪ {0}}; P_{I,−} swaps the indices."""
    _check_facet(p.d, facet)
    inside = sorted(facet.subset)
    outside = [0] + [k for k in range(1, p.d + 1) if k not in facet.subset]
    if facet.sign > 0:
        return tuple(molecule(p, j, i) for i in inside for j in outside)
    return tuple(molecule(p, i, j) for i in inside for j in outside)


@lru_cache(maxsize=64)
def halfspaces(p: DualParams) -> HalfspaceSystem:
    """All 2^{d+1}−2 facet inequalities, each written as ⟨normal, x⟩ ≤ offset."""
    logger.debug("building %s facet inequalities of J_%s", 2 ** (p.d + 1) - 2, p.d)
    rows = []
    for facet in facet_ids(p.d):
        plane = facet_hyperplane(p, facet)
        if facet.sign > 0:
            rows.append(Halfspace(tuple(-n for n in plane.normal), -plane.offset))
        else:
            rows.append(Halfspace(plane.normal, plane.offset))
    return HalfspaceSystem(p.d, tuple(rows))


def contains(p: DualParams, x: Sequence[Fraction]) -> bool:
    return halfspaces(p).contains(tuple(to_rational(v) for v in x))


def _radical(p: DualParams, size: int) -> Fraction:
    return size * p.b**2 + (p.d - size) * (p.b - p.c) ** 2


def hyperplane_origin_distance(p: DualParams, size: int) -> Surd:
    """bc/√(Vb² + (d−V)(b−c)²) for an ordinary facet with |I| = V."""
    if not 1 <= size <= p.d - 1:
        raise BadParams(f"1 ≤ V ≤ d−1 violated: V={size}, d={p.d}")
    return surd_sqrt(1 / _radical(p, size)) * (p.b * p.c)


def facet_roof_spec(p: DualParams, facet: Union[FacetId, int]) -> RoofSpec:
    """Roof descriptor of the ordinary facet P_{I,±}; the sign does not change its shape."""
    if isinstance(facet, int):
        facet = FacetId(facet, 1)
    _check_facet(p.d, facet)
    if facet.is_extraordinary(p.d):
        raise BadFacet(f"the extraordinary facet {facet} is a simplex, not a roof")
    size = facet.size
    return RoofSpec(
        C=p.d - size,
        V=size,
        ell1=Surd(p.b, 2),
        ell2=Surd(p.c, 2),
        h=surd_sqrt(_radical(p, size) / ((p.d - size) * size)),
    )


def pyramid_volume_extraordinary(d: int, c: Union[int, str, Fraction]) -> Fraction:
    return to_rational(c) ** d / math.factorial(d)


def pyramid_volume_ordinary(
    d: int, b: Union[int, str, Fraction], c: Union[int, str, Fraction], size: int
) -> Fraction:
    """(1/d!)·Σ_{n<V} C(d−V−1+n, n)·b^{d−V+n}·c^{V−n}."""
    if not 1 <= size <= d - 1:
        raise BadParams(f"1 ≤ V ≤ d−1 violated: V={size}, d={d}")
    b, c = to_rational(b), to_rational(c)
    total = sum(
        (binomial(d - size - 1 + n, n) * b ** (d - size + n) * c ** (size - n) for n in range(size)),
        Fraction(0),
    )
    return total / math.factorial(d)


def pyramid_volume_ordinary_via_roof(p: DualParams, size: int) -> Surd:
    """roof_volume(facet) · distance(origin, facet) / d, carried out in surds."""
    facet = FacetId((1 << size) - 1, 1)
    spec = facet_roof_spec(p, facet)
    return roof_volume(spec) * hyperplane_origin_distance(p, size) / p.d


def volume_closed_form(d: int, b: Union[int, str, Fraction], c: Union[int, str, Fraction]) -> Fraction:
    """(2/d!)·Σ_{j<d} C(d+j−1, j)·b^j·c^{d−j}, for any rationals b, c."""
    if d < 1:
        raise BadParams(f"dimension must be ≥ 1, got d={d}")
    b, c = to_rational(b), to_rational(c)
    total = sum((binomial(d + j - 1, j) * b**j * c ** (d - j) for j in range(d)), Fraction(0))
    return 2 * total / math.factorial(d)


def volume(p: DualParams) -> Fraction:
    return volume_closed_form(p.d, p.b, p.c)


def volume_pyramid_sum(p: DualParams) -> Fraction:
    """2·(c^d/d! + Σ_V C(d, V)·pyr_ord(V)): both signs of every facet, apex at the origin."""
    ordinary = sum(
        (binomial(p.d, size) * pyramid_volume_ordinary(p.d, p.b, p.c, size) for size in range(1, p.d)),
        Fraction(0),
    )
    return 2 * (pyramid_volume_extraordinary(p.d, p.c) + ordinary)


def volume_primal_params(
    ell: Union[int, str, Fraction], a: Union[int, str, Fraction], d: int
) -> Fraction:
    """(2^{d+1}/(ℓ^d·d!))·Σ_{j<d} C(d+j−1, j)·(ℓ/(2(ℓ−a)))^j; homogeneous of degree −d in (ℓ,a)."""
    p = IsocantedParams.of(d, ell, a)
    ratio = p.ell / (2 * (p.ell - p.a))
    total = sum((binomial(d + j - 1, j) * ratio**j for j in range(d)), Fraction(0))
    return Fraction(2 ** (d + 1)) / (p.ell**d * math.factorial(d)) * total


def _check_metric(metric: Metric) -> int:
    size = len(metric)
    for i, row in enumerate(metric):
        if len(row) != size:
            raise DimensionMismatch(f"metric row {i} has {len(row)} entries, expected {size}")
        if row[i] != 0:
            raise BadParams(f"metric diagonal must vanish, d({i},{i})={row[i]}")
        for j in range(i):
            if row[j] != metric[j][i]:
                raise BadParams(f"metric is not symmetric at ({i},{j})")
    return size


def _check_triangle(metric: Metric) -> None:
    size = len(metric)
    for i in range(size):
        for j in range(size):
            for k in range(size):
                if metric[i][k] > metric[i][j] + metric[j][k]:
                    raise BadParams(f"triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})")


def metric_space(d: int, ell: Union[int, str, Fraction], a: Union[int, str, Fraction]) -> Metric:
    """Distances on [d]∪{0}: ℓ−a between points of [d], ℓ/2 to the marked point 0."""
    p = IsocantedParams.of(d, ell, a)
    if p.a == 0:
        raise BadParams("0 < a < ℓ violated: a=0")

    def distance(i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        return p.ell / 2 if 0 in (i, j) else p.ell - p.a

    metric = tuple(tuple(distance(i, j) for j in range(d + 1)) for i in range(d + 1))
    _check_triangle(metric)
    return metric


def four_point_check(metric: Metric) -> bool:
    """Buneman's condition: among the three pairings of any four points the two largest sums agree."""
    size = _check_metric(metric)
    for p, q, r, s in combinations(range(size), 4):
        sums = sorted(
            (
                metric[p][q] + metric[r][s],
                metric[p][r] + metric[q][s],
                metric[p][s] + metric[q][r],
            )
        )
        if sums[1] != sums[2]:
            return False
    return True


def lipschitz_ball_halfspaces(metric: Metric) -> HalfspaceSystem:
    """Unit ball of Lip₀(M): |x_i − x_j| ≤ d(i,j) with x_0 = 0."""
    size = _check_metric(metric)
    d = size - 1
    rows = []
    for j in range(1, size):
        unit = tuple(Fraction(int(k == j - 1)) for k in range(d))
        rows.append(Halfspace(unit, metric[0][j]))
        rows.append(Halfspace(tuple(-x for x in unit), metric[0][j]))
    for j in range(1, size):
        for k in range(j + 1, size):
            difference = tuple(
                Fraction(1) if i == j - 1 else Fraction(-1) if i == k - 1 else Fraction(0)
                for i in range(d)
            )
            rows.append(Halfspace(difference, metric[j][k]))
            rows.append(Halfspace(tuple(-x for x in difference), metric[j][k]))
    return HalfspaceSystem(d, tuple(rows))


def metric_molecules(metric: Metric) -> Tuple[Molecule, ...]:
    """(e_i − e_j)/d(i,j) with e_0 = 0, in the order of `molecules`."""
    size = _check_metric(metric)
    d = size - 1

    def basis(k: int) -> Point:
        return tuple(Fraction(int(k > 0 and m == k - 1)) for m in range(d))

    result = []
    for i in range(size):
        for j in range(size):
            if i != j:
                scale = 1 / metric[i][j]
                point = tuple((x - y) * scale for x, y in zip(basis(i), basis(j)))
                result.append(Molecule(i, j, point))
    return tuple(result)
