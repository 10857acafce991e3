# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Optional, Sequence

import numpy as np

from graphs import Edge, Graph, edge_key, numerical_rank
from share import (
    InvalidArgumentException,
    NotEmbeddableException,
    NotFoundException,
    Tolerances,
    shared_logger,
)
from systems import (
    LengthAssignment,
    PolynomialSystem,
    SystemFactory,
    build_sphere_system,
    evaluate_inequalities,
    find_cm_unknowns,
    mixed_volume,
    newton_polytopes,
    sphere_positions,
)

from .solution import Solution, SolutionSet
from .solve import GenericStart, solve_total_degree

FORMULATION_SPHERE: str = "sphere"
FORMULATION_CM: str = "cm"

# every distance-system solution stands for an embedding and its mirror image
_reflections: int = 2
_max_mixed_volume_variables: int = 4
_realization_check: float = 1e-6


class EmbeddingCount:
    """
    Complex and real embedding counts of a graph at given lengths, with the solutions behind them
    """

    def __init__(
        self,
        graph: Graph,
        lengths: LengthAssignment,
        formulation: str,
        system: PolynomialSystem,
        solutions: SolutionSet,
        complex_count: int,
        real_count: int,
        real_solutions: Sequence[Solution],
    ):
        self.graph = graph
        self.lengths = lengths
        self.formulation = formulation
        self.system = system
        self.solutions = solutions
        self.complex_count = complex_count
        self.real_count = real_count
        self.real_solutions = list(real_solutions)

    @property
    def triangle(self) -> Optional[tuple[int, int, int]]:
        triangle = self.system.metadata.get("triangle")
        return tuple(triangle) if triangle else None  # type: ignore

    @property
    def unknowns(self) -> list[str]:
        return list(self.system.metadata.get("unknowns", []))

    def positions(self, solution: Solution) -> np.ndarray:
        """
        Vertex coordinates of a sphere solution, one row per vertex
        """

        if self.formulation != FORMULATION_SPHERE:
            raise InvalidArgumentException("Positions are only available for sphere solutions")

        return sphere_positions(self.system, solution.values)

    def to_dict(self) -> dict[str, Any]:
        return {
            "formulation": self.formulation,
            "triangle": list(self.triangle) if self.triangle else None,
            "unknowns": self.unknowns,
            "complex_count": self.complex_count,
            "real_count": self.real_count,
            "lengths": self.lengths.digest(),
        }

    def __repr__(self) -> str:
        return f"EmbeddingCount(formulation={self.formulation}, c3={self.complex_count}, r3={self.real_count})"


def _solve(
    system: PolynomialSystem,
    seed: int,
    tolerances: Tolerances,
    threads: int,
    digest: str,
    start: Optional[GenericStart],
) -> SolutionSet:
    if start is not None and start.accepts(system):
        return start.track_to(system, seed, tolerances, threads, digest)

    return solve_total_degree(system, seed, tolerances, threads, digest)


def count_embeddings(
    graph: Graph,
    lengths: LengthAssignment,
    formulation: str = FORMULATION_SPHERE,
    triangle: Optional[Sequence[int]] = None,
    unknowns: Optional[Sequence[Edge]] = None,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
    threads: int = 1,
    start: Optional[GenericStart] = None,
) -> EmbeddingCount:
    """
    Counts complex and real embeddings.
    Sphere systems count their solutions directly; Cayley-Menger subsystems keep the real positive solutions
    satisfying the embeddability inequalities and double both counts for reflections
    """

    tolerances = tolerances or Tolerances()
    lengths = lengths.restrict(graph)
    digest = lengths.digest()

    if formulation == FORMULATION_SPHERE:
        system = SystemFactory.create("sphere", graph, lengths, triangle=triangle)
        solutions = _solve(system, seed, tolerances, threads, digest, start)
        real = solutions.real_solutions()
        count = EmbeddingCount(graph, lengths, formulation, system, solutions, solutions.complex_count, len(real), real)

    elif formulation == FORMULATION_CM:
        chosen = list(unknowns) if unknowns is not None else find_cm_unknowns(graph, lengths, seed, tolerances)
        system = SystemFactory.create("cm", graph, lengths, unknowns=chosen, seed=seed, tolerances=tolerances)
        solutions = _solve(system, seed, tolerances, threads, digest, start)

        real = []
        for solution in solutions.real_solutions():
            values = solution.real_values()
            if np.any(values <= 0):
                continue

            if evaluate_inequalities(graph, lengths, dict(zip(chosen, values)), tolerances):
                real.append(solution)

        count = EmbeddingCount(
            graph,
            lengths,
            formulation,
            system,
            solutions,
            _reflections * solutions.complex_count,
            _reflections * len(real),
            real,
        )

    else:
        raise InvalidArgumentException(
            f"Formulation must be one of {FORMULATION_SPHERE},{FORMULATION_CM}, given: {formulation}"
        )

    shared_logger.info(
        "embeddings counted",
        extra={
            "formulation": formulation,
            "n": graph.n,
            "complex_count": count.complex_count,
            "real_count": count.real_count,
            "lengths": digest,
        },
    )

    return count


def min_mixed_volume_over_triangles(
    graph: Graph,
    lengths: LengthAssignment,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
    threads: int = 1,
) -> int:
    """
    Smallest root bound over all choices of the fixed triangle:
    the mixed volume when the sphere system is small enough, its complex root count otherwise
    """

    triangles = graph.triangles()
    if not triangles:
        raise NotFoundException("Graph has no triangle")

    bounds: dict[tuple[int, int, int], int] = {}
    for triangle in triangles:
        system = build_sphere_system(graph, lengths, triangle)
        if system.n_variables <= _max_mixed_volume_variables:
            bounds[triangle] = mixed_volume(newton_polytopes(system), threads)
        else:
            bounds[triangle] = solve_total_degree(system, seed, tolerances, threads, lengths.digest()).complex_count

    best = min(bounds, key=lambda triangle: (bounds[triangle], triangle))
    shared_logger.debug(
        "triangle bounds", extra={"bounds": {"-".join(map(str, key)): value for key, value in bounds.items()}}
    )

    return bounds[best]


def realize_from_distances(distances: np.ndarray, tolerances: Optional[Tolerances] = None) -> np.ndarray:
    """
    Coordinates in R^3 with the given pairwise distances, by classical multidimensional scaling of the Gram matrix
    """

    tolerances = tolerances or Tolerances()
    matrix = np.asarray(distances, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidArgumentException("Distances must be a square matrix")

    if not np.allclose(matrix, matrix.T) or np.any(matrix < 0) or np.any(np.diag(matrix) != 0):
        raise InvalidArgumentException("Distances must be symmetric, non negative and zero on the diagonal")

    n = len(matrix)
    squared = matrix**2

    bordered = np.ones((n + 1, n + 1))
    bordered[0, 0] = 0.0
    bordered[1:, 1:] = squared
    rank = numerical_rank(bordered, tolerances.rank)
    if rank > 5:
        raise NotEmbeddableException(f"Cayley-Menger rank {rank} exceeds 5")

    centering = np.eye(n) - np.ones((n, n)) / n
    gram = -0.5 * centering @ squared @ centering
    eigenvalues, eigenvectors = np.linalg.eigh(gram)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues, eigenvectors = eigenvalues[order], eigenvectors[:, order]

    scale = max(float(np.abs(eigenvalues).max(initial=0.0)), 1.0)
    if np.any(eigenvalues < -tolerances.rank * scale):
        raise NotEmbeddableException(f"Gram matrix has a negative eigenvalue: {eigenvalues.min()}")

    points = np.zeros((n, 3))
    dimension = min(3, n)
    points[:, :dimension] = eigenvectors[:, :dimension] * np.sqrt(np.clip(eigenvalues[:dimension], 0.0, None))

    recovered = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=2)
    if np.abs(recovered - matrix).max(initial=0.0) > _realization_check * max(float(matrix.max(initial=0.0)), 1.0):
        raise NotEmbeddableException("Distances are not realized in R^3")

    return points


def distance_matrix(points: np.ndarray) -> np.ndarray:
    return np.linalg.norm(points[:, None, :] - points[None, :, :], axis=2)


def unknown_assignment(count: EmbeddingCount, solution: Solution, unknowns: Sequence[Edge]) -> dict[Edge, float]:
    """
    Squared distances of the given vertex pairs in the embedding of a sphere solution
    """

    points = count.positions(solution).real
    assignment = {}
    for i, j in unknowns:
        assignment[(i, j)] = float(np.sum((points[i - 1] - points[j - 1]) ** 2))

    shared_logger.debug("unknown assignment", extra={"pairs": [edge_key(edge) for edge in unknowns]})

    return assignment
