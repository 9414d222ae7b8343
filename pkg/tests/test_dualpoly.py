import math
from fractions import Fraction

import pytest

from dualpoly import (
    DualParams,
    FacetId,
    contains,
    f_vector,
    facet_hyperplane,
    facet_hyperplanes,
    facet_ids,
    facet_roof_spec,
    facet_vertices,
    four_point_check,
    from_primal,
    halfspaces,
    hyperplane_origin_distance,
    lipschitz_ball_halfspaces,
    metric_molecules,
    metric_space,
    molecule,
    molecule_distance,
    molecules,
    pyramid_volume_extraordinary,
    pyramid_volume_ordinary,
    pyramid_volume_ordinary_via_roof,
    tabulated_distance,
    to_primal,
    volume,
    volume_closed_form,
    volume_primal_params,
    volume_pyramid_sum,
)
from errors import BadFacet, BadParams, DimensionTooLarge
from exactnum import Surd, binomial, surd_sqrt
from isocanted import IsocantedParams
from isocanted import halfspaces as primal_halfspaces
from roofs import RoofSpec, ell3, simplex_volume


def F(*values):
    return tuple(Fraction(v) for v in values)


def test_dual_params_reject():
    with pytest.raises(BadParams):
        DualParams.of(3, 0, 1)
    with pytest.raises(BadParams):
        DualParams.of(3, 1, -1)
    with pytest.raises(BadParams):
        DualParams.of(1, 1, 1)


def test_from_and_to_primal():
    assert from_primal(2, 1, 3) == DualParams(3, 1, 1)
    assert from_primal(2, 0, 3) == DualParams(3, Fraction(1, 2), 1)
    assert to_primal(1, 1) == (2, 1)
    assert to_primal(Fraction(1, 2), 1) == (2, 0)
    with pytest.raises(BadParams):
        to_primal(Fraction(1, 3), 1)


def test_primal_round_trip(random_ell_a):
    for _ in range(100):
        ell, a = random_ell_a()
        p = from_primal(ell, a, 4)
        assert to_primal(p.b, p.c) == (ell, a)


def test_molecules_d2():
    p = DualParams.of(2, 1, 1)
    assert {m.point for m in molecules(p)} == {F(1, 0), F(0, 1), F(-1, 0), F(0, -1), F(1, -1), F(-1, 1)}


@pytest.mark.parametrize("d", range(2, 8))
def test_molecules_are_antipodal(d):
    p = DualParams.of(d, Fraction(3, 2), Fraction(2, 3))
    mols = molecules(p)
    assert len(mols) == d * (d + 1) == f_vector(d)[0]
    points = {m.point for m in mols}
    assert len(points) == len(mols)
    for m in mols:
        assert molecule(p, m.j, m.i).point == tuple(-x for x in m.point)


def test_molecule_rejects_bad_indices():
    p = DualParams.of(3, 1, 1)
    with pytest.raises(BadParams):
        molecule(p, 1, 1)
    with pytest.raises(BadParams):
        molecule(p, 0, 4)


def test_molecule_distance_examples():
    p = DualParams.of(4, 1, 2)
    assert molecule_distance(molecule(p, 1, 0), molecule(p, 0, 1)) == 4
    assert molecule_distance(molecule(p, 1, 2), molecule(p, 2, 1)) == Surd(2, 2)
    assert molecule_distance(molecule(p, 3, 1), molecule(p, 0, 1)) == Surd(1, 2)
    assert molecule_distance(molecule(p, 1, 0), molecule(p, 2, 0)) == Surd(2, 2)


@pytest.mark.parametrize("d", range(2, 6))
def test_tabulated_distances_match_coordinates(d, random_rational):
    for _ in range(3):
        p = DualParams(d, random_rational(), random_rational())
        mols = molecules(p)
        for m1 in mols:
            for m2 in mols:
                assert tabulated_distance(p, m1, m2) == molecule_distance(m1, m2)


def test_f_vector():
    assert f_vector(3) == (12, 24, 14)
    assert f_vector(2) == (6, 6)
    with pytest.raises(BadParams):
        f_vector(1)


@pytest.mark.parametrize("d", range(2, 11))
def test_f_vector_matches_enumeration(d):
    p = DualParams.of(d, 2, 1)
    counts = f_vector(d)
    assert len(molecules(p)) == counts[0]
    assert len(facet_ids(d)) == counts[-1] == 2 ** (d + 1) - 2


def test_facet_ids_cap():
    with pytest.raises(DimensionTooLarge):
        facet_ids(25)


def test_facet_id_helpers():
    facet = FacetId.of([1, 3], -1)
    assert facet.mask == 0b101
    assert facet.subset == frozenset({1, 3})
    assert facet.size == 2
    assert str(facet) == "-{1,3}"
    assert FacetId.of([1, 2, 3], 1).is_extraordinary(3)
    with pytest.raises(BadFacet):
        FacetId.of([0, 1], 1)


def test_facet_hyperplane_d4():
    p = DualParams.of(4, 1, 3)
    plane = facet_hyperplane(p, FacetId.of([1, 2], 1))
    assert plane.normal == F(1, 1, -2, -2)
    assert plane.offset == -3
    extraordinary = facet_hyperplane(p, FacetId.of([1, 2, 3, 4], -1))
    assert extraordinary.normal == F(1, 1, 1, 1)
    assert extraordinary.offset == 3
    with pytest.raises(BadFacet):
        facet_hyperplane(p, FacetId(0, 1))
    with pytest.raises(BadFacet):
        facet_hyperplane(p, FacetId(1 << 4, 1))
    with pytest.raises(BadFacet):
        facet_hyperplane(p, FacetId(1, 0))


def test_facet_hyperplanes_count():
    planes = facet_hyperplanes(DualParams.of(5, 2, 3))
    assert len(planes) == 2**6 - 2


def test_facet_vertices_d4():
    p = DualParams.of(4, 1, 1)
    facet = FacetId.of([1, 2], 1)
    found = {(m.i, m.j) for m in facet_vertices(p, facet)}
    assert found == {(3, 1), (4, 1), (3, 2), (4, 2), (0, 1), (0, 2)}
    opposite = {(m.i, m.j) for m in facet_vertices(p, FacetId.of([1, 2], -1))}
    assert opposite == {(j, i) for i, j in found}


@pytest.mark.parametrize("d", range(2, 7))
def test_facet_vertices_lie_on_their_planes(d):
    p = DualParams.of(d, Fraction(5, 4), Fraction(2, 3))
    for facet in facet_ids(d):
        plane = facet_hyperplane(p, facet)
        mols = facet_vertices(p, facet)
        size = facet.size
        assert len(mols) == size * (d + 1 - size)
        for m in mols:
            assert sum(n * x for n, x in zip(plane.normal, m.point)) == plane.offset


@pytest.mark.parametrize("d", range(2, 7))
def test_molecules_satisfy_every_facet(d):
    p = DualParams.of(d, Fraction(7, 5), Fraction(1, 2))
    system = halfspaces(p)
    for m in molecules(p):
        assert system.contains(m.point)
        assert system.tight_count(m.point) >= d


def test_contains():
    p = DualParams.of(3, 1, 1)
    assert contains(p, F(0, 0, 0))
    assert contains(p, F(1, 0, 0))
    assert not contains(p, F("101/100", 0, 0))
    assert not contains(p, F("2/3", "2/3", "2/3"))


def test_hyperplane_origin_distance():
    assert hyperplane_origin_distance(DualParams.of(3, 1, 1), 1) == 1
    assert hyperplane_origin_distance(DualParams.of(4, 1, 2), 2) == 1
    assert hyperplane_origin_distance(DualParams.of(5, 2, 2), 3) == 2 * surd_sqrt(Fraction(1, 3))
    with pytest.raises(BadParams):
        hyperplane_origin_distance(DualParams.of(3, 1, 1), 3)


def test_facet_roof_spec_d4():
    b, c = Fraction(2), Fraction(3)
    spec = facet_roof_spec(DualParams(4, b, c), FacetId.of([1, 2], -1))
    assert spec == RoofSpec(2, 2, Surd(b, 2), Surd(c, 2), surd_sqrt((b * b + (b - c) ** 2) / 2))
    with pytest.raises(BadFacet):
        facet_roof_spec(DualParams(4, b, c), FacetId.of([1, 2, 3, 4], 1))


@pytest.mark.parametrize("d", range(3, 9))
def test_roof_lateral_edges_match_molecule_distance(d):
    p = DualParams.of(d, Fraction(5, 3), Fraction(1, 2))
    lateral = molecule_distance(molecule(p, 2, 1), molecule(p, 0, 1))
    assert lateral == surd_sqrt(p.b**2 + (p.b - p.c) ** 2)
    for size in range(1, d):
        assert ell3(facet_roof_spec(p, (1 << size) - 1)) == lateral


def test_pyramid_volumes():
    assert pyramid_volume_extraordinary(3, 1) == Fraction(1, 6)
    assert pyramid_volume_ordinary(3, 1, 1, 1) == Fraction(1, 6)
    assert pyramid_volume_ordinary(3, 1, 1, 2) == Fraction(1, 3)
    with pytest.raises(BadParams):
        pyramid_volume_ordinary(3, 1, 1, 3)


@pytest.mark.parametrize("d", range(2, 9))
def test_pyramid_via_roof(d):
    p = DualParams.of(d, Fraction(7, 4), Fraction(2, 5))
    for size in range(1, d):
        via_roof = pyramid_volume_ordinary_via_roof(p, size)
        assert via_roof == pyramid_volume_ordinary(d, p.b, p.c, size)
        assert via_roof.is_rational


@pytest.mark.parametrize("d", range(2, 9))
def test_extraordinary_pyramid_from_simplex(d):
    c = Fraction(4, 3)
    surd_form = simplex_volume(d - 1, Surd(c, 2)) * surd_sqrt(Fraction(1, d)) * c / d
    assert surd_form == pyramid_volume_extraordinary(d, c)


def test_volume_examples():
    assert volume(DualParams.of(2, 1, 1)) == 3
    assert volume(DualParams.of(3, 1, 1)) == Fraction(10, 3)
    assert volume_closed_form(2, 0, Fraction(3, 2)) == Fraction(9, 4)
    with pytest.raises(BadParams):
        volume_closed_form(0, 1, 1)


def test_volume_low_dimension_displays(random_rational):
    for _ in range(9):
        b, c = random_rational(), random_rational()
        assert volume_closed_form(2, b, c) == 2 * c / 2 * (2 * b + c)
        assert volume_closed_form(3, b, c) == 2 * c / 6 * (6 * b * b + 3 * b * c + c * c)
        assert volume_closed_form(4, b, c) == 2 * c / 24 * (20 * b**3 + 10 * b * b * c + 4 * b * c * c + c**3)


@pytest.mark.parametrize("d", [2, 3, 5, 8, 13])
def test_volume_is_homogeneous_of_degree_d(d, random_rational):
    for _ in range(5):
        b, c, t = random_rational(), random_rational(), random_rational()
        scaled = volume(DualParams.of(d, t * b, t * c))
        assert scaled == t**d * volume(DualParams.of(d, b, c))


@pytest.mark.parametrize("d", range(1, 9))
def test_volume_closed_form_vanishes_with_c(d, random_rational):
    for b in (Fraction(0), Fraction(1), random_rational(), -random_rational()):
        assert volume_closed_form(d, b, 0) == 0


@pytest.mark.parametrize("d", range(2, 21))
def test_pyramid_sum_equals_closed_form(d, random_rational):
    for _ in range(5):
        p = DualParams(d, random_rational(), random_rational())
        assert volume_pyramid_sum(p) == volume(p)


def test_alexander_ball():
    for d in range(2, 17):
        assert volume(DualParams.of(d, 1, 1)) == Fraction(binomial(2 * d, d), math.factorial(d))


@pytest.mark.parametrize("a", [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2)])
def test_volume_primal_params_d3(a):
    assert volume_primal_params(2, a, 3) == (a * a - 7 * a + 16) / (3 * (2 - a) ** 2)


def test_volume_primal_params_examples():
    assert volume_primal_params(2, 1, 3) == Fraction(10, 3)
    assert volume_primal_params(2, Fraction(1, 2), 3) == Fraction(17, 9)
    for d in range(2, 21):
        for ell in (Fraction(1), Fraction(5, 2)):
            assert volume_primal_params(ell, 0, d) == Fraction(4**d) / (ell**d * math.factorial(d))


def test_volume_primal_params_matches_dual(random_ell_a, rng):
    for _ in range(100):
        ell, a = random_ell_a()
        d = rng.randint(2, 12)
        assert volume_primal_params(ell, a, d) == volume(from_primal(ell, a, d))
        assert volume_primal_params(2 * ell, 2 * a, d) == volume_primal_params(ell, a, d) / 2**d


def test_metric_space():
    metric = metric_space(3, 2, 1)
    assert metric[0] == F(0, 1, 1, 1)
    assert metric[1] == F(1, 0, 1, 1)
    assert all(metric[i][j] == metric[j][i] for i in range(4) for j in range(4))
    with pytest.raises(BadParams):
        metric_space(3, 2, 0)


@pytest.mark.parametrize("d", range(2, 8))
def test_metric_space_is_a_tree_metric(d):
    assert four_point_check(metric_space(d, 3, 1))


def test_four_point_check_fails_on_a_cycle():
    square = (F(0, 1, 2, 1), F(1, 0, 1, 2), F(2, 1, 0, 1), F(1, 2, 1, 0))
    assert not four_point_check(square)


@pytest.mark.parametrize("d", range(2, 6))
def test_metric_molecules_are_the_dual_vertices(d):
    ell, a = Fraction(3), Fraction(5, 4)
    metric = metric_space(d, ell, a)
    p = from_primal(ell, a, d)
    assert [m.point for m in metric_molecules(metric)] == [m.point for m in molecules(p)]


@pytest.mark.parametrize("d", range(2, 5))
def test_lipschitz_ball_is_the_primal_body(d):
    ell, a = Fraction(5, 2), Fraction(1, 2)
    ball = lipschitz_ball_halfspaces(metric_space(d, ell, a))
    assert set(ball) == set(primal_halfspaces(IsocantedParams.of(d, ell, a)))
