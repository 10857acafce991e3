# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Optional

import elasticapm
import numpy as np

from graphs import Graph, SamplingSubgraph
from share import InvalidArgumentException, SolverException, Tolerances, UnsupportedException, shared_logger
from solver import GenericStart, SolutionSet
from systems import LengthAssignment, sphere_positions

from .family import CouplerFamily
from .sampling import SamplerState

_default_steps: int = 200
_default_margin: float = 1e-3


class SweepSpec:
    """
    Values of the length r of uc visited by a curve trace.
    Missing bounds default to the range of distances between u and the sphere about w carrying c
    """

    def __init__(self, r_min: Optional[float] = None, r_max: Optional[float] = None, steps: int = _default_steps):
        if steps < 2:
            raise InvalidArgumentException(f"Sweep needs at least 2 steps, given: {steps}")

        if r_min is not None and r_min <= 0:
            raise InvalidArgumentException(f"Sweep r_min must be positive, given: {r_min}")

        if r_min is not None and r_max is not None and r_max <= r_min:
            raise InvalidArgumentException(f"Sweep r_max must exceed r_min, given: {r_min}, {r_max}")

        self.r_min = r_min
        self.r_max = r_max
        self.steps = steps

    def values(self, family: CouplerFamily, t: float) -> np.ndarray:
        d_uw = float(np.hypot(family.x_w, family.y_w - t))
        d_cw = family.d_cw if family.d_cw is not None else 0.0
        reach = max(d_uw + d_cw, family.base_r)

        low = self.r_min if self.r_min is not None else max(abs(d_uw - d_cw), _default_margin * reach)
        high = self.r_max if self.r_max is not None else reach
        span = high - low
        if self.r_min is None:
            low += _default_margin * span

        if self.r_max is None:
            high -= _default_margin * span

        return np.linspace(low, high, self.steps)


class CouplerCurve:
    """
    Real positions of c traced while the length of uc is swept, in the frame of the triangle vuw
    (v at the origin, u on the y-axis), and the positions of c in the real embeddings at the base lengths
    """

    def __init__(
        self,
        subgraph: SamplingSubgraph,
        t: float,
        radii: np.ndarray,
        points: np.ndarray,
        markers: np.ndarray,
        failed_steps: int,
    ):
        self.subgraph = subgraph
        self.t = t
        self.radii = radii
        self.points = points
        self.markers = markers
        self.failed_steps = failed_steps

    @property
    def empty(self) -> bool:
        return len(self.points) == 0

    def rows(self) -> list[dict[str, Any]]:
        curve = [
            {"x": float(x), "y": float(y), "z": float(z), "r": float(r), "marker": 0}
            for (x, y, z), r in zip(self.points, self.radii)
        ]
        markers = [{"x": float(x), "y": float(y), "z": float(z), "r": "", "marker": 1} for x, y, z in self.markers]

        return curve + markers

    def __len__(self) -> int:
        return len(self.points)


def _real_positions(state: SamplerState, solutions: SolutionSet, vertex: int) -> np.ndarray:
    assert state.system is not None
    positions = [
        sphere_positions(state.system, solution.values)[vertex - 1].real for solution in solutions.real_solutions()
    ]

    return np.array(positions, dtype=float).reshape(-1, 3)


@elasticapm.capture_span()
def trace_coupler_curve(
    graph: Graph,
    lengths: LengthAssignment,
    subgraph: SamplingSubgraph,
    sweep: Optional[SweepSpec] = None,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
    threads: int = 1,
    start: Optional[GenericStart] = None,
) -> CouplerCurve:
    """
    Coupler curve of c in the mechanism without uc: for every swept r the system with uc restored at length r
    is tracked from the previous one and the real positions of c are collected
    """

    family = CouplerFamily(graph, lengths, subgraph)
    if not family.spherical:
        raise UnsupportedException(f"Subgraph {subgraph} is not spherical")

    u, v, w, _, c = subgraph.as_tuple()
    sweep = sweep or SweepSpec()
    t = family.base_t

    state = SamplerState(graph, family.lengths, (v, u, w), seed, tolerances, threads, start)
    markers = _real_positions(state, state.count(family.lengths), c)

    radii: list[float] = []
    points: list[np.ndarray] = []
    failed_steps = 0
    for r in sweep.values(family, t):
        try:
            solutions = state.count(family.lengths_at(t, float(r)))
        except SolverException as e:
            shared_logger.debug("curve step failed", extra={"r": float(r), "error": str(e)})
            failed_steps += 1
            continue

        found = _real_positions(state, solutions, c)
        points.extend(found)
        radii.extend([float(r)] * len(found))

    curve = CouplerCurve(
        subgraph,
        t,
        np.array(radii, dtype=float),
        np.array(points, dtype=float).reshape(-1, 3),
        markers,
        failed_steps,
    )

    if curve.empty:
        shared_logger.warning("empty coupler curve", extra={"subgraph": list(subgraph.as_tuple()), "t": t})
    else:
        shared_logger.info(
            "coupler curve traced",
            extra={"subgraph": list(subgraph.as_tuple()), "points": len(curve), "markers": len(markers)},
        )

    return curve
