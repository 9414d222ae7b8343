from fractions import Fraction
from logging import getLogger

import pytest

from errors import BadParams
from records import all_passed
from verify_graph import VerificationGraph


@pytest.fixture
def graph():
    return VerificationGraph(workers=2, logger=getLogger("isocant:verify:test"))


def names(checks):
    return [check.name for check in checks]


def test_full_pipeline_in_low_dimension(graph):
    checks = graph.invoke(3, Fraction(2), Fraction(1), samples=50_000, seed=5)
    assert all_passed(checks)
    assert names(checks) == [
        "primal expanded form",
        "dual in (b,c) and (ℓ,a)",
        "Bose determinant",
        "zonotope minors",
        "pyramid sum",
        "facet pyramids",
        "LP vertices",
        "bipolarity",
        "Monte Carlo primal",
        "Monte Carlo dual",
        "Mahler inequality",
        "Mahler certificate",
    ]


def test_cube_skips_vertex_checks(graph):
    checks = graph.invoke(4, Fraction(3), Fraction(0), samples=20_000, seed=5)
    assert all_passed(checks)
    assert "LP vertices" not in names(checks)
    assert "bipolarity" not in names(checks)
    assert "Monte Carlo primal" in names(checks)


def test_middle_dimension_uses_bipolarity_only(graph):
    checks = graph.invoke(6, Fraction(5, 2), Fraction(1, 3), samples=20_000, seed=5)
    assert all_passed(checks)
    assert "LP vertices" not in names(checks)
    assert "bipolarity" in names(checks)


def test_high_dimension_skips_sampling(graph):
    checks = graph.invoke(14, Fraction(2), Fraction(1, 2))
    assert all_passed(checks)
    assert "Monte Carlo primal" not in names(checks)
    assert "facet pyramids" not in names(checks)
    assert names(checks)[-1] == "Mahler certificate"


def test_zonotope_is_skipped_past_the_generator_cap(graph):
    checks = graph.invoke(24, Fraction(2), Fraction(1))
    zonotope = next(check for check in checks if check.name == "zonotope minors")
    assert zonotope.passed
    assert zonotope.detail.startswith("skipped")


def test_rejects_bad_parameters(graph):
    with pytest.raises(BadParams):
        graph.invoke(3, Fraction(2), Fraction(2))


@pytest.mark.asyncio
async def test_ainvoke_matches_invoke(graph):
    sync = graph.invoke(2, Fraction(3), Fraction(1), samples=10_000, seed=9)
    async_checks = await graph.ainvoke(2, Fraction(3), Fraction(1), samples=10_000, seed=9)
    assert async_checks == sync
