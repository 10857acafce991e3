# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import math
from typing import Any, Optional, Sequence

import elasticapm
import numpy as np

from graphs import Graph, SamplingSubgraph
from share import Budget, OutOfRangeException, SolverException, Tolerances, UnsupportedException, shared_logger
from solver import GenericStart, SolutionSet, count_embeddings, solve_generic, track_parameter_homotopy
from systems import LengthAssignment, PolynomialSystem, SystemFactory

from .family import CouplerFamily

_default_phi_points: int = 20
_default_theta_points: int = 24
_default_margin: float = 0.05
_default_audit_fraction: float = 0.05


class GridSpec:
    """
    Row-major grid over phi in (-pi/2, pi/2) and theta in (0, pi), both kept `margin` away from the ends.
    Extra (phi, theta) points are sampled first
    """

    def __init__(
        self,
        phi_points: int = _default_phi_points,
        theta_points: int = _default_theta_points,
        margin: float = _default_margin,
        extra: Optional[Sequence[tuple[float, float]]] = None,
    ):
        if phi_points < 1 or theta_points < 1:
            raise ValueError("GridSpec needs at least one point per angle")

        if not 0 < margin < math.pi / 2:
            raise ValueError(f"GridSpec margin must be in (0, pi/2), given: {margin}")

        self.phi_points = phi_points
        self.theta_points = theta_points
        self.margin = margin
        self.extra: list[tuple[float, float]] = list(extra or [])

    def phis(self) -> np.ndarray:
        return np.linspace(-math.pi / 2 + self.margin, math.pi / 2 - self.margin, self.phi_points)

    def thetas(self) -> np.ndarray:
        return np.linspace(self.margin, math.pi - self.margin, self.theta_points)

    def points(self) -> list[tuple[float, float]]:
        grid = [(float(phi), float(theta)) for phi in self.phis() for theta in self.thetas()]
        return self.extra + grid


class SampleRecord:
    """
    Real embedding count at one (phi, theta) sample of a coupler family
    """

    def __init__(
        self,
        subgraph: SamplingSubgraph,
        phi: float,
        theta: float,
        t: float,
        r: float,
        lengths: LengthAssignment,
        real_count: int,
        complex_count: int,
        failed: bool = False,
    ):
        self.subgraph = subgraph
        self.phi = phi
        self.theta = theta
        self.t = t
        self.r = r
        self.lengths = lengths
        self.real_count = real_count
        self.complex_count = complex_count
        self.failed = failed

    def to_row(self) -> dict[str, Any]:
        return {
            "phi": self.phi,
            "theta": self.theta,
            "t": self.t,
            "r": self.r,
            "real_count": self.real_count,
        }

    def __repr__(self) -> str:
        return f"SampleRecord(phi={self.phi:.4f}, theta={self.theta:.4f}, real_count={self.real_count})"


class SamplerState:
    """
    Solver state chained from sample to sample.
    The sphere system family of the graph is solved once at random complex parameters; every new sample is
    tracked from the previous one, and from the generic start again whenever solutions were lost on the way
    """

    def __init__(
        self,
        graph: Graph,
        lengths: LengthAssignment,
        triangle: Optional[Sequence[int]] = None,
        seed: int = 0,
        tolerances: Optional[Tolerances] = None,
        threads: int = 1,
        start: Optional[GenericStart] = None,
    ):
        self.graph = graph
        self.seed = seed
        self.tolerances = tolerances or Tolerances()
        self.threads = threads
        self.template: PolynomialSystem = SystemFactory.create("sphere", graph, lengths, triangle=triangle)
        self.start: Optional[GenericStart] = start if start is not None and start.accepts(self.template) else None
        self.system: Optional[PolynomialSystem] = None
        self.solutions: Optional[SolutionSet] = None
        self.solver_calls: int = 0

    @property
    def triangle(self) -> tuple[int, int, int]:
        return tuple(self.template.metadata["triangle"])  # type: ignore

    def _generic_start(self) -> GenericStart:
        if self.start is None:
            self.start = solve_generic(self.template, self.seed, self.tolerances, self.threads)

        return self.start

    def count(self, lengths: LengthAssignment) -> SolutionSet:
        target = SystemFactory.retarget(self.template, self.graph, lengths)
        digest = lengths.digest()
        start = self._generic_start()
        self.solver_calls += 1

        solutions: Optional[SolutionSet] = None
        if self.system is not None and self.solutions is not None:
            solutions = track_parameter_homotopy(
                self.system, self.solutions, target, self.seed, self.tolerances, self.threads, digest
            )
            if solutions.complex_count < start.solutions.complex_count:
                shared_logger.debug(
                    "chain restart",
                    extra={"tracked": solutions.complex_count, "expected": start.solutions.complex_count},
                )
                solutions = None

        if solutions is None:
            solutions = start.track_to(target, self.seed, self.tolerances, self.threads, digest)

        self.system, self.solutions = target, solutions
        return solutions


@elasticapm.capture_span()
def sample_grid(
    graph: Graph,
    lengths: LengthAssignment,
    subgraph: SamplingSubgraph,
    grid: Optional[GridSpec] = None,
    state: Optional[SamplerState] = None,
    budget: Optional[Budget] = None,
) -> list[SampleRecord]:
    """
    Real embedding counts over a (phi, theta) grid of the coupler family of a spherical subgraph.
    Points with t <= 0 are skipped; a point whose solve fails is recorded as failed and the grid goes on
    """

    family = CouplerFamily(graph, lengths, subgraph)
    if not family.spherical:
        raise UnsupportedException(f"Subgraph {subgraph} is not spherical")

    grid = grid or GridSpec()
    state = state or SamplerState(graph, lengths)
    max_calls = budget.solver_calls if budget is not None else None

    records: list[SampleRecord] = []
    calls = 0
    for phi, theta in grid.points():
        if max_calls is not None and calls >= max_calls:
            shared_logger.warning("sampling budget exhausted", extra={"solver_calls": calls})
            break

        try:
            sampled, t, r = family.lengths_from_phi_theta(phi, theta)
        except OutOfRangeException:
            continue

        calls += 1
        try:
            solutions = state.count(sampled)
        except SolverException as e:
            shared_logger.warning("sample failed", extra={"phi": phi, "theta": theta, "error": str(e)})
            records.append(SampleRecord(subgraph, phi, theta, t, r, sampled, 0, 0, failed=True))
            continue

        records.append(
            SampleRecord(subgraph, phi, theta, t, r, sampled, solutions.real_count, solutions.complex_count)
        )

    shared_logger.info(
        "grid sampled",
        extra={
            "subgraph": list(subgraph.as_tuple()),
            "samples": len(records),
            "max_real_count": max((record.real_count for record in records), default=0),
        },
    )

    return records


def audit_records(
    graph: Graph,
    records: Sequence[SampleRecord],
    fraction: float = _default_audit_fraction,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
    triangle: Optional[Sequence[int]] = None,
) -> list[SampleRecord]:
    """
    Recounts a random share of the records from scratch and returns those whose count differs
    """

    candidates = [record for record in records if not record.failed]
    if not candidates:
        return []

    rng = np.random.default_rng(seed)
    size = max(1, int(round(fraction * len(candidates))))
    chosen = sorted(rng.choice(len(candidates), size=min(size, len(candidates)), replace=False).tolist())

    mismatched = []
    for index in chosen:
        record = candidates[index]
        fresh = count_embeddings(graph, record.lengths, triangle=triangle, seed=seed, tolerances=tolerances)
        if fresh.real_count != record.real_count:
            shared_logger.warning(
                "sample audit mismatch",
                extra={
                    "phi": record.phi,
                    "theta": record.theta,
                    "tracked": record.real_count,
                    "fresh": fresh.real_count,
                },
            )
            mismatched.append(record)

    return mismatched
