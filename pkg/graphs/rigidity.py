# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools
from typing import Optional

import numpy as np

from share import InvalidArgumentException, NotFoundException, Tolerances, shared_logger

from .graph import Edge, Graph

_trials: int = 3
_grid_scale: int = 10**6


def random_realization(n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Random points of the integer grid [-10^6, 10^6]^3 scaled to the unit box
    """

    return rng.integers(-_grid_scale, _grid_scale, size=(n, 3), endpoint=True).astype(float) / _grid_scale


def rigidity_matrix(graph: Graph, points: np.ndarray) -> np.ndarray:
    """
    |E| x 3n matrix: the row of edge ij holds p_i - p_j in the columns of i and p_j - p_i in those of j
    """

    matrix = np.zeros((len(graph), 3 * graph.n))
    for row, (i, j) in enumerate(graph.edges):
        difference = points[i - 1] - points[j - 1]
        matrix[row, 3 * (i - 1) : 3 * i] = difference
        matrix[row, 3 * (j - 1) : 3 * j] = -difference

    return matrix


def numerical_rank(matrix: np.ndarray, relative: float) -> int:
    if matrix.size == 0:
        return 0

    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values[0] == 0:
        return 0

    return int(np.sum(singular_values > relative * singular_values[0]))


def is_generically_rigid(graph: Graph, seed: int = 0, tolerances: Optional[Tolerances] = None) -> bool:
    """
    Rank test of the rigidity matrix at random realizations: rigid iff the rank reaches 3n - 6
    """

    tolerances = tolerances or Tolerances()
    rng = np.random.default_rng(seed)
    expected = 3 * graph.n - 6

    best = 0
    for _ in range(_trials):
        best = max(best, numerical_rank(rigidity_matrix(graph, random_realization(graph.n, rng)), tolerances.rank))
        if best == expected:
            return True

    return False


def stress_matrix(graph: Graph, stress: np.ndarray) -> np.ndarray:
    """
    n x n matrix with -w_ij off the diagonal on edges and row sums on the diagonal
    """

    omega = np.zeros((graph.n, graph.n))
    for weight, (i, j) in zip(stress, graph.edges):
        omega[i - 1, j - 1] = -weight
        omega[j - 1, i - 1] = -weight

    omega[np.diag_indices(graph.n)] = -omega.sum(axis=1)

    return omega


def is_globally_rigid(graph: Graph, seed: int = 0, tolerances: Optional[Tolerances] = None) -> bool:
    """
    Randomized sufficient test: a random equilibrium stress of a generic realization
    whose stress matrix has rank n - 4 certifies global rigidity in R^3
    """

    tolerances = tolerances or Tolerances()
    if not is_generically_rigid(graph, seed=seed, tolerances=tolerances):
        raise InvalidArgumentException("Global rigidity test needs a generically rigid graph")

    if graph.n <= 4:
        return True

    rng = np.random.default_rng(seed + 1)
    for _ in range(_trials):
        matrix = rigidity_matrix(graph, random_realization(graph.n, rng))
        left, singular_values, _ = np.linalg.svd(matrix)
        rank = int(np.sum(singular_values > tolerances.rank * singular_values[0]))

        stresses = left[:, rank:]
        if stresses.shape[1] == 0:
            return False

        stress = stresses @ rng.standard_normal(stresses.shape[1])
        if numerical_rank(stress_matrix(graph, stress), tolerances.rank) == graph.n - 4:
            return True

    return False


def find_global_extension(graph: Graph, seed: int = 0, tolerances: Optional[Tolerances] = None) -> list[Edge]:
    """
    Smallest set of non-edges, in lexicographic order of subsets, whose addition makes graph globally rigid
    """

    non_edges = graph.non_edges()
    limit = max(graph.n - 4, 0)
    # the empty extension is tried on four vertices only
    for size in range(min(1, limit), limit + 1):
        for added in itertools.combinations(non_edges, size):
            if is_globally_rigid(graph.with_edges(added), seed=seed, tolerances=tolerances):
                shared_logger.debug("global extension", extra={"size": size, "edges": [list(edge) for edge in added]})
                return list(added)

    raise NotFoundException(f"No globally rigid extension with at most {graph.n - 4} edges")
