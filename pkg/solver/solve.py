# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Optional

import elasticapm
import numpy as np

from share import InvalidArgumentException, SolverException, Tolerances, shared_logger
from systems import PolynomialSystem

from .factory import HomotopyFactory
from .homotopy import random_gamma
from .solution import SOLUTION_FAILED, SOLUTION_REFINED, Solution, SolutionSet
from .tracker import PathTracker, TrackResult, solve_linear

_max_attempts: int = 3
# unrefinable endpoints larger than this are counted as paths going to infinity
_refine_divergence_norm: float = 1e4


def refine_points(
    system: PolynomialSystem, points: np.ndarray, tolerances: Optional[Tolerances] = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Batched Newton iteration on the target system.
    Returns the refined points, their max residuals and the mask of converged rows
    """

    tolerances = tolerances or Tolerances()
    compiled = system.compiled()
    parameters = system.parameter_values[None, :]
    threshold = tolerances.residual * (1.0 + system.coefficient_scale())

    x = np.array(points, dtype=complex).reshape(-1, system.n_variables)
    with np.errstate(all="ignore"):
        for _ in range(tolerances.max_newton_iterations):
            values = compiled.evaluate(x, parameters)
            residuals = np.abs(values).max(axis=1, initial=0.0)
            pending = np.flatnonzero(~(residuals <= threshold) & np.all(np.isfinite(x), axis=1))
            if pending.size == 0:
                break

            x[pending] -= solve_linear(compiled.jacobian(x[pending], parameters), values[pending])

        residuals = np.abs(compiled.evaluate(x, parameters)).max(axis=1, initial=0.0)

    converged = (residuals <= threshold) & np.all(np.isfinite(x), axis=1)

    return x, residuals, converged


def refine(solution: Solution, system: PolynomialSystem, tolerances: Optional[Tolerances] = None) -> Solution:
    """
    Newton refinement of one solution; a point that does not converge comes back marked failed
    """

    tolerances = tolerances or Tolerances()
    points, residuals, converged = refine_points(system, solution.values[None, :], tolerances)

    return Solution(
        points[0],
        float(residuals[0]),
        SOLUTION_REFINED if converged[0] else SOLUTION_FAILED,
        solution.multiplicity,
        tolerances,
    )


def _collect(
    system: PolynomialSystem, tracked: TrackResult, seed: int, lengths_digest: str, tolerances: Tolerances
) -> tuple[SolutionSet, float]:
    points, residuals, converged = refine_points(system, tracked.successful, tolerances)
    far = np.linalg.norm(points, axis=1) > _refine_divergence_norm
    far = far | ~np.all(np.isfinite(points), axis=1)

    solutions = [
        Solution(point, float(residual), tolerances=tolerances)
        for point, residual, ok in zip(points, residuals, converged)
        if ok
    ]
    diverged = tracked.n_diverged + int(np.count_nonzero(~converged & far))
    failed = tracked.n_failed + int(np.count_nonzero(~converged & ~far))

    solution_set = SolutionSet(
        solutions,
        system.formulation,
        lengths_digest,
        seed,
        paths=tracked.n_paths,
        diverged=diverged,
        failed=failed,
        tolerances=tolerances,
    )

    return solution_set, (failed / tracked.n_paths if tracked.n_paths else 0.0)


def _trivial(system: PolynomialSystem, seed: int, lengths_digest: str, tolerances: Tolerances) -> SolutionSet:
    empty = Solution([], 0.0, tolerances=tolerances)
    return SolutionSet([empty], system.formulation, lengths_digest, seed, paths=1, tolerances=tolerances)


@elasticapm.capture_span()
def solve_total_degree(
    system: PolynomialSystem,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
    threads: int = 1,
    lengths_digest: str = "",
) -> SolutionSet:
    """
    Tracks all Bezout-many paths of the total degree homotopy and returns the finite refined endpoints.
    Too many failed paths trigger a retry with a new gamma, solutions of all attempts are merged
    """

    tolerances = tolerances or Tolerances()
    if system.n_variables == 0:
        return _trivial(system, seed, lengths_digest, tolerances)

    rng = np.random.default_rng(seed)
    merged: Optional[SolutionSet] = None
    for attempt in range(1, _max_attempts + 1):
        homotopy = HomotopyFactory.create("total-degree", system=system, gamma=random_gamma(rng))
        tracker = PathTracker(homotopy, tolerances)
        tracked = tracker.track_generated(homotopy.start_solutions, homotopy.n_paths, threads)

        solution_set, failure_rate = _collect(system, tracked, seed, lengths_digest, tolerances)
        merged = solution_set if merged is None else merged.merge(solution_set)

        shared_logger.debug(
            "total degree solve",
            extra={"attempt": attempt, "paths": tracked.n_paths, "solutions": solution_set.complex_count},
        )

        if failure_rate <= tolerances.failure_rate:
            return merged

        shared_logger.warning("path failures", extra={"attempt": attempt, "failure_rate": failure_rate})

    raise SolverException(f"Path failure rate above {tolerances.failure_rate} after {_max_attempts} attempts")


@elasticapm.capture_span()
def track_parameter_homotopy(
    system_from: PolynomialSystem,
    solutions_from: SolutionSet,
    system_to: PolynomialSystem,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
    threads: int = 1,
    lengths_digest: str = "",
) -> SolutionSet:
    """
    Tracks every solution of system_from to system_to, both members of one parameterized family
    """

    tolerances = tolerances or Tolerances()
    if not system_from.same_family(system_to):
        raise InvalidArgumentException("Parameter homotopy needs two systems of the same family")

    if system_to.n_variables == 0:
        return _trivial(system_to, seed, lengths_digest, tolerances)

    starts = solutions_from.values()
    rng = np.random.default_rng(seed)
    merged: Optional[SolutionSet] = None
    for attempt in range(1, _max_attempts + 1):
        homotopy = HomotopyFactory.create(
            "parameter", system_from=system_from, system_to=system_to, gamma=random_gamma(rng), rng=rng
        )
        tracked = PathTracker(homotopy, tolerances).track(starts, threads)

        solution_set, failure_rate = _collect(system_to, tracked, seed, lengths_digest, tolerances)
        merged = solution_set if merged is None else merged.merge(solution_set)

        if failure_rate <= tolerances.failure_rate:
            return merged

        shared_logger.warning("path failures", extra={"attempt": attempt, "failure_rate": failure_rate})

    raise SolverException(f"Path failure rate above {tolerances.failure_rate} after {_max_attempts} attempts")


class GenericStart:
    """
    Solutions of a random complex member of a family, the start of parameter homotopies to any other member
    """

    def __init__(self, system: PolynomialSystem, solutions: SolutionSet):
        self.system = system
        self.solutions = solutions

    def accepts(self, system: PolynomialSystem) -> bool:
        return self.system.same_family(system)

    def track_to(
        self,
        system: PolynomialSystem,
        seed: int = 0,
        tolerances: Optional[Tolerances] = None,
        threads: int = 1,
        lengths_digest: str = "",
    ) -> SolutionSet:
        return track_parameter_homotopy(self.system, self.solutions, system, seed, tolerances, threads, lengths_digest)


def solve_generic(
    system: PolynomialSystem, seed: int = 0, tolerances: Optional[Tolerances] = None, threads: int = 1
) -> GenericStart:
    """
    Solves a member of the family of system at random complex parameters by total degree homotopy
    """

    rng = np.random.default_rng(seed)
    values = system.parameter_values
    size = len(values)
    scale = 1.0 + np.abs(values)
    generic = system.specialize(values + scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size)))

    return GenericStart(generic, solve_total_degree(generic, seed, tolerances, threads))
