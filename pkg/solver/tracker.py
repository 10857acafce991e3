# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

import numpy as np

from share import Tolerances, shared_logger

from .homotopy import CommonHomotopy

PATH_TRACKING: int = -1
PATH_SUCCESS: int = 0
PATH_DIVERGED: int = 1
PATH_FAILED: int = 2

_default_chunk_size: int = 1024
_default_max_steps: int = 10000
_default_initial_step: float = 0.01
_default_max_step: float = 0.05
_corrector_iterations: int = 3
_corrector_tolerance: float = 1e-8
_first_correction_limit: float = 0.1
_successes_before_growth: int = 3
_snap_to_target: float = 1e-13


def solve_linear(matrices: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """
    Batched solve of matrices @ y = vectors; singular rows fall back to least squares
    """

    try:
        return np.linalg.solve(matrices, vectors[..., None])[..., 0]
    except np.linalg.LinAlgError:
        solved = np.empty_like(vectors)
        for row in range(len(vectors)):
            try:
                solved[row] = np.linalg.lstsq(matrices[row], vectors[row], rcond=None)[0]
            except np.linalg.LinAlgError:
                solved[row] = np.nan

        return solved


def _row_norms(x: np.ndarray) -> np.ndarray:
    return np.linalg.norm(x, axis=1)


class TrackResult:
    """
    Outcome of every tracked path in start order.
    Endpoints may be kept for a subset of the paths only, listed by endpoint_indices
    """

    def __init__(self, status: np.ndarray, steps: np.ndarray, endpoints: np.ndarray, endpoint_indices: np.ndarray):
        self.status = status
        self.steps = steps
        self.endpoints = endpoints
        self.endpoint_indices = endpoint_indices

    @property
    def successful(self) -> np.ndarray:
        return self.endpoints[self.status[self.endpoint_indices] == PATH_SUCCESS]

    @property
    def n_paths(self) -> int:
        return len(self.status)

    @property
    def n_diverged(self) -> int:
        return int(np.count_nonzero(self.status == PATH_DIVERGED))

    @property
    def n_failed(self) -> int:
        return int(np.count_nonzero(self.status == PATH_FAILED))

    @property
    def failure_rate(self) -> float:
        return self.n_failed / self.n_paths if self.n_paths else 0.0

    def successes_only(self) -> "TrackResult":
        kept = self.status[self.endpoint_indices] == PATH_SUCCESS
        return TrackResult(self.status, self.steps, self.endpoints[kept], self.endpoint_indices[kept])

    @staticmethod
    def concatenate(results: list["TrackResult"], n_variables: int) -> "TrackResult":
        if not results:
            empty = np.zeros(0, dtype=int)
            return TrackResult(empty, empty, np.zeros((0, n_variables), dtype=complex), empty)

        offsets = np.cumsum([0] + [result.n_paths for result in results[:-1]])
        return TrackResult(
            np.concatenate([result.status for result in results]),
            np.concatenate([result.steps for result in results]),
            np.concatenate([result.endpoints for result in results]),
            np.concatenate([result.endpoint_indices + offset for result, offset in zip(results, offsets)]),
        )


class PathTracker:
    """
    Batched predictor-corrector tracker.
    Every path keeps its own time and step size; the predictor is a 4th order Runge-Kutta step on
    dx/dtau = -J^-1 dH/dtau, followed by a fixed number of Newton corrections at the new time
    """

    def __init__(
        self,
        homotopy: CommonHomotopy,
        tolerances: Optional[Tolerances] = None,
        chunk_size: int = _default_chunk_size,
        max_steps: int = _default_max_steps,
        initial_step: float = _default_initial_step,
        max_step: float = _default_max_step,
    ):
        self.homotopy = homotopy
        self.tolerances = tolerances or Tolerances()
        self.chunk_size = chunk_size
        self.max_steps = max_steps
        self.initial_step = initial_step
        self.max_step = max_step

    def _velocity(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        return -solve_linear(self.homotopy.jacobian(x, tau), self.homotopy.derivative(x, tau))

    def _predict(self, x: np.ndarray, tau: np.ndarray, step: np.ndarray) -> np.ndarray:
        h = step[:, None]
        k1 = self._velocity(x, tau)
        k2 = self._velocity(x + 0.5 * h * k1, tau + 0.5 * step)
        k3 = self._velocity(x + 0.5 * h * k2, tau + 0.5 * step)
        k4 = self._velocity(x + h * k3, tau + step)

        return x + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0

    def _correct(self, x: np.ndarray, tau: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        corrections = []
        for _ in range(_corrector_iterations):
            delta = solve_linear(self.homotopy.jacobian(x, tau), self.homotopy.evaluate(x, tau))
            x = x - delta
            corrections.append(_row_norms(delta))

        scale = 1.0 + _row_norms(x)
        accepted = (
            np.all(np.isfinite(x), axis=1)
            & (corrections[-1] <= _corrector_tolerance * scale)
            & (corrections[0] <= _first_correction_limit * scale)
        )

        return x, accepted

    def _track_chunk(self, starts: np.ndarray) -> TrackResult:
        x = np.array(starts, dtype=complex)
        size = len(x)
        tau = np.zeros(size)
        step = np.full(size, self.initial_step)
        streak = np.zeros(size, dtype=int)
        steps = np.zeros(size, dtype=int)
        status = np.full(size, PATH_TRACKING)

        with np.errstate(all="ignore"):
            while True:
                active = np.flatnonzero(status == PATH_TRACKING)
                if active.size == 0:
                    break

                current_tau = tau[active]
                current_step = np.minimum(step[active], 1.0 - current_tau)

                predicted = self._predict(x[active], current_tau, current_step)
                corrected, accepted = self._correct(predicted, current_tau + current_step)
                steps[active] += 1

                moved = active[accepted]
                x[moved] = corrected[accepted]
                reached = tau[moved] + current_step[accepted]
                tau[moved] = np.where(1.0 - reached < _snap_to_target, 1.0, reached)
                streak[moved] += 1
                grow = moved[streak[moved] >= _successes_before_growth]
                step[grow] = np.minimum(2.0 * step[grow], self.max_step)
                streak[grow] = 0

                stuck = active[~accepted]
                step[stuck] = current_step[~accepted] / 2.0
                streak[stuck] = 0

                norms = _row_norms(x[active])
                status[active[tau[active] >= 1.0]] = PATH_SUCCESS
                status[active[norms > self.tolerances.divergence]] = PATH_DIVERGED

                small = active[(step[active] < self.tolerances.min_step) & (status[active] == PATH_TRACKING)]
                # paths still large this close to the target are counted as going to infinity
                endgame = tau[small] >= self.tolerances.endgame_start
                far = endgame & (_row_norms(x[small]) > self.tolerances.endgame_norm)
                status[small[far]] = PATH_DIVERGED
                status[small[~far]] = PATH_FAILED

                status[active[(steps[active] >= self.max_steps) & (status[active] == PATH_TRACKING)]] = PATH_FAILED

        return TrackResult(status, steps, x, np.arange(size))

    def track(self, starts: np.ndarray, threads: int = 1) -> TrackResult:
        """
        Tracks every start point from tau = 0 to tau = 1, chunks of paths run concurrently
        """

        starts = np.asarray(starts, dtype=complex).reshape(-1, self.homotopy.n_variables)
        chunks = [starts[index : index + self.chunk_size] for index in range(0, len(starts), self.chunk_size)]

        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(self._track_chunk, chunks))

        result = TrackResult.concatenate(results, self.homotopy.n_variables)
        shared_logger.debug(
            "paths tracked",
            extra={"paths": result.n_paths, "diverged": result.n_diverged, "failed": result.n_failed},
        )

        return result

    def track_generated(
        self, generate: Callable[[np.ndarray], np.ndarray], n_paths: int, threads: int = 1
    ) -> TrackResult:
        """
        Tracks n_paths start points produced chunk by chunk from their path indices.
        Only successful endpoints are kept
        """

        def _track_indices(first: int) -> TrackResult:
            indices = np.arange(first, min(first + self.chunk_size, n_paths))
            return self._track_chunk(generate(indices)).successes_only()

        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_track_indices, range(0, n_paths, self.chunk_size)))

        result = TrackResult.concatenate(results, self.homotopy.n_variables)
        shared_logger.debug(
            "paths tracked",
            extra={"paths": result.n_paths, "diverged": result.n_diverged, "failed": result.n_failed},
        )

        return result
