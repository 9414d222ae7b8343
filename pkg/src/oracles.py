"""
Independent Verification Engines

Each oracle reaches a volume or a vertex set by a route that shares no formula with the
closed forms it checks:

- mc_volume: hit-or-miss Monte Carlo over a bounding box
- zonotope_volume: 2^d times the sum of |d-minors| of the generator matrix
- lp_vertices: every feasible intersection of d hyperplanes, solved exactly
- shoelace_area / hull_volume: planar and low-dimensional triangulation checks
- pyramid_decomposition_volume: apex-at-origin pyramids over every enumerated dual facet

Monte Carlo determinism: samples are cut into fixed-size chunks and chunk k draws from
numpy's Philox4x64-10 generator keyed by the seed and jumped k times. Each chunk yields an
integer hit count and the counts are summed, so the estimate for a given (seed, samples,
chunk) is bitwise identical whatever the worker count.

Uniform doubles from numpy are exact dyadics k/2^53, so every sample is an exact rational
point. Membership is decided in floating point only when every slack clears a tolerance;
rows near a boundary are re-decided in exact arithmetic.
"""

import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from logging import getLogger
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from config import Config
from dualpoly import (
    DualParams,
    facet_ids,
    facet_roof_spec,
    facet_vertices,
    from_primal,
    hyperplane_origin_distance,
    molecules,
)
from errors import BadBox, BadParams, DimensionTooLarge, TooManyGenerators, Unbounded
from exactnum import Point, Surd, surd_sqrt, to_rational
from isocanted import GeneratorSet, HalfspaceSystem, IsocantedParams, subset_vertex, vertices
from roofs import roof_volume, simplex_volume
from structmat import DenseMatrix, dense_det, dense_solve

logger = getLogger("isocant:oracles")

Box = Sequence[Tuple[Fraction, Fraction]]
Membership = Union[HalfspaceSystem, Callable[[Point], bool]]

PYRAMID_DIMENSION_CAP = 12
FLOAT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    std_error: float
    samples: int
    seed: int
    hits: int
    box_volume: Fraction

    def within(self, exact: Union[Fraction, float], sigmas: float = 5.0) -> bool:
        return abs(self.estimate - float(exact)) <= sigmas * self.std_error


def isocanted_box(p: IsocantedParams) -> List[Tuple[Fraction, Fraction]]:
    """[−ℓ/2, ℓ/2]^d, which contains I_d(ℓ,a)."""
    return [(-p.ell / 2, p.ell / 2)] * p.d


def dual_box(p: DualParams) -> List[Tuple[Fraction, Fraction]]:
    reach = max(p.b, p.c)
    return [(-reach, reach)] * p.d


def _check_box(bbox: Box) -> Tuple[Tuple[Fraction, Fraction], ...]:
    box = tuple((to_rational(lo), to_rational(hi)) for lo, hi in bbox)
    if not box:
        raise BadBox("bounding box has no axes")
    for axis, (lo, hi) in enumerate(box):
        if lo >= hi:
            raise BadBox(f"axis {axis} has lo={lo} ≥ hi={hi}")
    return box


def _chunk_generator(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed).jumped(index))


def _exact_point(unit: np.ndarray, box: Tuple[Tuple[Fraction, Fraction], ...]) -> Point:
    return tuple(lo + Fraction(float(u)) * (hi - lo) for u, (lo, hi) in zip(unit, box))


def _count_system(
    system: HalfspaceSystem, unit: np.ndarray, box: Tuple[Tuple[Fraction, Fraction], ...]
) -> int:
    normals, offsets = system.to_arrays()
    lows = np.array([float(lo) for lo, _ in box])
    widths = np.array([float(hi - lo) for lo, hi in box])
    points = lows + unit * widths
    slack = offsets - points @ normals.T
    reach = max(float(max(abs(lo), abs(hi))) for lo, hi in box)
    row_norm = float(np.abs(normals).sum(axis=1).max())
    tolerance = FLOAT_TOLERANCE * max(1.0, float(np.abs(offsets).max()), row_norm * reach)
    minimum = slack.min(axis=1)
    inside = minimum > tolerance
    outside = minimum < -tolerance
    ambiguous = np.flatnonzero(~inside & ~outside)
    hits = int(inside.sum())
    if ambiguous.size:
        logger.debug("deciding %s boundary samples exactly", ambiguous.size)
        hits += sum(1 for row in ambiguous if system.contains(_exact_point(unit[row], box)))
    return hits


def _count_predicate(
    predicate: Callable[[Point], bool], unit: np.ndarray, box: Tuple[Tuple[Fraction, Fraction], ...]
) -> int:
    return sum(1 for row in unit if predicate(_exact_point(row, box)))


def mc_volume(
    membership: Membership,
    bbox: Box,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    chunk: Optional[int] = None,
) -> McEstimate:
    """
    Hit-or-miss volume estimate of the body inside `bbox`.

    `membership` is either a HalfspaceSystem (vectorized, with exact fallback near the
    boundary) or an exact predicate over rational points. Unset arguments come from Config.

    Args:
        membership: halfspace system or exact predicate
        bbox: axis-aligned box as (low, high) pairs; must contain the body
        samples: number of uniform draws
        seed: 64-bit Philox key
        workers: threads; the result does not depend on this
        chunk: samples per chunk; part of the stream definition

    Returns:
        The estimate with its binomial standard error, hit count and box volume.

    Raises:
        BadParams: non-positive samples, chunk or workers, or a seed outside 64 bits.
        BadBox: an empty or inverted box, or one of the wrong dimension.
    """
    config = Config()
    samples = config.MC_SAMPLES if samples is None else samples
    seed = config.MC_SEED if seed is None else seed
    workers = config.MC_WORKERS if workers is None else workers
    chunk = config.MC_CHUNK if chunk is None else chunk
    if samples < 1:
        raise BadParams(f"samples ≥ 1 violated: samples={samples}")
    if not 0 <= seed < 2**64:
        raise BadParams(f"seed must be a 64-bit unsigned integer, got {seed}")
    if chunk < 1 or workers < 1:
        raise BadParams(f"chunk ≥ 1 and workers ≥ 1 violated: chunk={chunk}, workers={workers}")
    box = _check_box(bbox)
    d = len(box)

    if isinstance(membership, HalfspaceSystem):
        if membership.d != d:
            raise BadBox(f"box has {d} axes, body lives in dimension {membership.d}")
        counter = functools.partial(_count_system, membership)
    else:
        counter = functools.partial(_count_predicate, membership)

    def count_chunk(index: int) -> int:
        size = min(chunk, samples - index * chunk)
        unit = _chunk_generator(seed, index).random((size, d))
        return counter(unit, box)

    chunks = (samples + chunk - 1) // chunk
    logger.debug("sampling %s points in %s chunks on %s workers", samples, chunks, workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        hits = sum(executor.map(count_chunk, range(chunks)))

    box_volume = Fraction(1)
    for lo, hi in box:
        box_volume *= hi - lo
    fraction = hits / samples
    return McEstimate(
        estimate=fraction * float(box_volume),
        std_error=float(np.sqrt(fraction * (1 - fraction) / samples)) * float(box_volume),
        samples=samples,
        seed=seed,
        hits=hits,
        box_volume=box_volume,
    )


def zonotope_volume(gens: GeneratorSet) -> Fraction:
    """2^d·Σ |det| over all d-subsets of the generators."""
    d, n = gens.d, len(gens)
    if n > Config.ZONOTOPE_GENERATOR_CAP:
        raise TooManyGenerators(f"{n} generators exceed the cap of {Config.ZONOTOPE_GENERATOR_CAP}")
    if n < d:
        raise BadParams(f"zonotope volume needs at least d={d} generators, got {n}")
    total = Fraction(0)
    for subset in combinations(gens.generators, d):
        minor = DenseMatrix(tuple(tuple(g[row] for g in subset) for row in range(d)))
        total += abs(dense_det(minor))
    return 2**d * total


def _check_bounded(system: HalfspaceSystem) -> bool:
    """False for an empty system; raises Unbounded when some coordinate is unbounded."""
    normals, offsets = system.to_arrays()
    for axis in range(system.d):
        for direction in (1.0, -1.0):
            objective = np.zeros(system.d)
            objective[axis] = -direction
            result = linprog(
                objective, A_ub=normals, b_ub=offsets, bounds=[(None, None)] * system.d, method="highs"
            )
            if result.status == 2:
                return False
            if result.status == 3:
                raise Unbounded(f"coordinate {axis + 1} is unbounded in direction {direction:+.0f}")
    return True


def lp_vertices(hs: HalfspaceSystem) -> Tuple[Point, ...]:
    """Basic feasible points of a bounded system in dimension ≤ 4, sorted."""
    if hs.d > Config.LP_DIMENSION_CAP:
        raise DimensionTooLarge(
            f"LP vertex enumeration capped at d={Config.LP_DIMENSION_CAP}, got d={hs.d}"
        )
    if not _check_bounded(hs):
        return ()
    found = set()
    for subset in combinations(hs.halfspaces, hs.d):
        matrix = DenseMatrix(tuple(h.normal for h in subset))
        point = dense_solve(matrix, [h.offset for h in subset])
        if point is not None and hs.contains(point):
            found.add(point)
    logger.debug("found %s vertices among %s halfspaces", len(found), len(hs))
    return tuple(sorted(found))


def _angle_order(left: Point, right: Point) -> int:
    def half(v: Point) -> int:
        return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1

    if half(left) != half(right):
        return half(left) - half(right)
    cross = left[0] * right[1] - left[1] * right[0]
    return -1 if cross > 0 else 1 if cross < 0 else 0


def shoelace_area(points: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact area of the convex polygon with the given vertices, in any order."""
    if any(len(point) != 2 for point in points):
        raise BadParams("shoelace area needs planar points")
    if len(points) < 3:
        return Fraction(0)
    pts = [tuple(to_rational(x) for x in point) for point in points]
    cx = sum((x for x, _ in pts), Fraction(0)) / len(pts)
    cy = sum((y for _, y in pts), Fraction(0)) / len(pts)
    centred = sorted(((x - cx, y - cy) for x, y in pts), key=functools.cmp_to_key(_angle_order))
    twice = sum(
        (x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(centred, centred[1:] + centred[:1])),
        Fraction(0),
    )
    return abs(twice) / 2


def hull_volume(points: Sequence[Sequence[Fraction]]) -> float:
    """Float volume of the convex hull through qhull's triangulation."""
    return float(ConvexHull(np.array([[float(x) for x in point] for point in points])).volume)


def pyramid_decomposition_volume(p: DualParams) -> Fraction:
    """Σ over every enumerated facet F of vol(F)·dist(O, F)/d, in surds."""
    if p.d > PYRAMID_DIMENSION_CAP:
        raise DimensionTooLarge(f"facet-by-facet sum capped at d={PYRAMID_DIMENSION_CAP}, got d={p.d}")
    extraordinary = simplex_volume(p.d - 1, Surd(p.c, 2)) * (surd_sqrt(Fraction(1, p.d)) * p.c) / p.d
    total = Fraction(0)
    for facet in facet_ids(p.d):
        if facet.is_extraordinary(p.d):
            pyramid = extraordinary
        else:
            base = roof_volume(facet_roof_spec(p, facet))
            pyramid = base * hyperplane_origin_distance(p, facet.size) / p.d
        total += pyramid.to_rational()
    return total


def bipolarity_check(p: IsocantedParams) -> bool:
    """
    ⟨v, m⟩ ≤ 1 for every primal vertex v and molecule m, with equality on all of P_{I,±}
    for the vertex polar to (I, ±).
    """
    dual = from_primal(p.ell, p.a, p.d)
    mols = molecules(dual)

    def pairing(v: Point, m: Point) -> Fraction:
        return sum((x * y for x, y in zip(v, m)), Fraction(0))

    if any(pairing(v, m.point) > 1 for v in vertices(p) for m in mols):
        return False
    for facet in facet_ids(p.d):
        vertex = subset_vertex(p, facet.mask)
        polar = tuple(-x for x in vertex) if facet.sign > 0 else vertex
        if any(pairing(polar, m.point) != 1 for m in facet_vertices(dual, facet)):
            return False
    return True
