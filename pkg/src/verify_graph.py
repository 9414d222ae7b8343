"""
Verification Workflow

A LangGraph state graph that runs every applicable oracle against the closed forms
for one isocanted cube I_d(ℓ,a) and its polar dual. Each node appends CheckResult rows
to the shared state through an additive reducer:

    closed_forms → bose_determinant → zonotope → pyramid_sum
        → [lp_vertices] → [bipolarity] → [monte_carlo] → mahler

Bracketed nodes are routed around when they do not apply: vertex checks need a > 0 and
small d, and Monte Carlo is skipped where hit rates collapse.
"""

import operator
import sys
from fractions import Fraction
from logging import DEBUG, Logger, StreamHandler
from typing import Annotated, List, Optional, TypedDict

from langgraph.graph import END, START, StateGraph

from config import Config
from dualpoly import from_primal
from dualpoly import halfspaces as dual_halfspaces
from dualpoly import volume as dual_volume
from dualpoly import volume_primal_params, volume_pyramid_sum
from errors import IsocantError
from isocanted import (
    IsocantedParams,
    bose_volume,
    generators,
    halfspaces,
    vertices,
    volume,
    volume_expanded,
)
from mahler import mahler_lower_bound, positivity_certificate, volume_product
from oracles import (
    PYRAMID_DIMENSION_CAP,
    bipolarity_check,
    dual_box,
    isocanted_box,
    lp_vertices,
    mc_volume,
    pyramid_decomposition_volume,
    zonotope_volume,
)
from records import CheckResult
from structmat import bose, dense_det

BIPOLARITY_DIMENSION_CAP = 10
MONTE_CARLO_DIMENSION_CAP = 8
MONTE_CARLO_SIGMAS = 5.0


class VerificationState(TypedDict):
    """State for the verification graph."""

    d: int
    ell: Fraction
    a: Fraction
    samples: int
    seed: int
    checks: Annotated[List[CheckResult], operator.add]


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


class VerificationGraph:
    """Oracle pipeline for one (d, ℓ, a)."""

    def __init__(
        self,
        *,
        workers: Optional[int] = None,
        logger: Logger = Logger("isocant:verify", DEBUG),
    ) -> None:
        self.config = Config()
        self.workers = workers or self.config.MC_WORKERS
        self._logger = logger
        if not logger.handlers:
            handler = StreamHandler(sys.stderr)
            handler.setLevel(self.config.LOG_LEVEL)
            logger.addHandler(handler)
        self.graph = self._build_graph()

    def _build_graph(self):
        workflow = StateGraph(VerificationState)

        workflow.add_node("closed_forms", self._closed_forms_node)
        workflow.add_node("bose_determinant", self._bose_determinant_node)
        workflow.add_node("zonotope", self._zonotope_node)
        workflow.add_node("pyramid_sum", self._pyramid_sum_node)
        workflow.add_node("lp_vertices", self._lp_vertices_node)
        workflow.add_node("bipolarity", self._bipolarity_node)
        workflow.add_node("monte_carlo", self._monte_carlo_node)
        workflow.add_node("mahler", self._mahler_node)

        workflow.add_edge(START, "closed_forms")
        workflow.add_edge("closed_forms", "bose_determinant")
        workflow.add_edge("bose_determinant", "zonotope")
        workflow.add_edge("zonotope", "pyramid_sum")
        workflow.add_conditional_edges(
            "pyramid_sum", self._route_vertices, ["lp_vertices", "bipolarity", "monte_carlo", "mahler"]
        )
        workflow.add_edge("lp_vertices", "bipolarity")
        workflow.add_conditional_edges("bipolarity", self._route_sampling, ["monte_carlo", "mahler"])
        workflow.add_edge("monte_carlo", "mahler")
        workflow.add_edge("mahler", END)

        return workflow.compile()

    @staticmethod
    def _params(state: VerificationState) -> IsocantedParams:
        return IsocantedParams(state["d"], state["ell"], state["a"])

    def _route_vertices(self, state: VerificationState) -> str:
        if state["a"] > 0 and state["d"] <= self.config.LP_DIMENSION_CAP:
            return "lp_vertices"
        if state["a"] > 0 and state["d"] <= BIPOLARITY_DIMENSION_CAP:
            return "bipolarity"
        return self._route_sampling(state)

    @staticmethod
    def _route_sampling(state: VerificationState) -> str:
        return "monte_carlo" if state["d"] <= MONTE_CARLO_DIMENSION_CAP else "mahler"

    def _closed_forms_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        primal = volume(p)
        dual = volume_primal_params(p.ell, p.a, p.d)
        return {
            "checks": [
                _check("primal expanded form", primal == volume_expanded(p), f"vol = {primal}"),
                _check(
                    "dual in (b,c) and (ℓ,a)",
                    dual == dual_volume(from_primal(p.ell, p.a, p.d)),
                    f"vol° = {dual}",
                ),
            ]
        }

    def _bose_determinant_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        structured = bose_volume(p)
        dense = abs(dense_det(bose(p.ell, p.a, p.d).to_dense()))
        return {
            "checks": [
                _check("Bose determinant", structured == volume(p) == dense, f"det = {structured}")
            ]
        }

    def _zonotope_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        try:
            zonotope = zonotope_volume(generators(p))
        except IsocantError as e:
            return {"checks": [_check("zonotope minors", True, f"skipped: {e}")]}
        return {"checks": [_check("zonotope minors", zonotope == volume(p), f"Σ|det| = {zonotope}")]}

    def _pyramid_sum_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        dual = from_primal(p.ell, p.a, p.d)
        closed = dual_volume(dual)
        checks = [_check("pyramid sum", volume_pyramid_sum(dual) == closed, f"vol° = {closed}")]
        if p.d <= PYRAMID_DIMENSION_CAP:
            enumerated = pyramid_decomposition_volume(dual)
            checks.append(_check("facet pyramids", enumerated == closed, f"Σ pyramids = {enumerated}"))
        return {"checks": checks}

    def _lp_vertices_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        found = set(lp_vertices(halfspaces(p)))
        expected = set(vertices(p))
        detail = f"{len(found)} of {len(expected)} vertices"
        return {"checks": [_check("LP vertices", found == expected, detail)]}

    def _bipolarity_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        detail = "⟨v, m⟩ ≤ 1, tight on polar facets"
        return {"checks": [_check("bipolarity", bipolarity_check(p), detail)]}

    def _monte_carlo_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        dual = from_primal(p.ell, p.a, p.d)
        checks = []
        for name, system, box, exact in (
            ("Monte Carlo primal", halfspaces(p), isocanted_box(p), volume(p)),
            ("Monte Carlo dual", dual_halfspaces(dual), dual_box(dual), dual_volume(dual)),
        ):
            estimate = mc_volume(
                system, box, samples=state["samples"], seed=state["seed"], workers=self.workers
            )
            self._logger.debug("%s: %s ± %s", name, estimate.estimate, estimate.std_error)
            checks.append(
                _check(
                    name,
                    estimate.within(exact, MONTE_CARLO_SIGMAS),
                    f"{estimate.estimate:.6f} ± {estimate.std_error:.6f} vs {float(exact):.6f}",
                )
            )
        return {"checks": checks}

    def _mahler_node(self, state: VerificationState) -> dict:
        p = self._params(state)
        product = volume_product(p.ell, p.a, p.d)
        certificate = positivity_certificate(p.d, strict=False)
        return {
            "checks": [
                _check("Mahler inequality", product >= mahler_lower_bound(p.d), f"P = {product}"),
                _check(
                    "Mahler certificate",
                    certificate.verdict,
                    certificate.failure or certificate.sign_pattern(),
                ),
            ]
        }

    def _initial_state(
        self, d: int, ell: Fraction, a: Fraction, samples: Optional[int], seed: Optional[int]
    ) -> VerificationState:
        IsocantedParams(d, ell, a)
        return {
            "d": d,
            "ell": Fraction(ell),
            "a": Fraction(a),
            "samples": self.config.MC_SAMPLES if samples is None else samples,
            "seed": self.config.MC_SEED if seed is None else seed,
            "checks": [],
        }

    def invoke(
        self,
        d: int,
        ell: Fraction,
        a: Fraction,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> List[CheckResult]:
        self._logger.debug("verifying d=%s ℓ=%s a=%s", d, ell, a)
        result = self.graph.invoke(self._initial_state(d, ell, a, samples, seed))
        return result["checks"]

    async def ainvoke(
        self,
        d: int,
        ell: Fraction,
        a: Fraction,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> List[CheckResult]:
        self._logger.debug("verifying d=%s ℓ=%s a=%s", d, ell, a)
        result = await self.graph.ainvoke(self._initial_state(d, ell, a, samples, seed))
        return result["checks"]
