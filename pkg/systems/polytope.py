# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import elasticapm
import numpy as np
import sympy
from scipy.spatial import ConvexHull, Delaunay

from share import InvalidArgumentException, UnsupportedException, shared_logger

from .polynomial import PolynomialSystem

_max_mixed_volume_dimension: int = 4


def _affine_rank(points: np.ndarray) -> int:
    if len(points) < 2:
        return 0

    return int(np.linalg.matrix_rank((points[1:] - points[0]).astype(float)))


def _convex_position(points: np.ndarray) -> np.ndarray:
    """
    Vertices of the convex hull of integer points, computed inside their affine span
    """

    points = np.unique(points, axis=0)
    rank = _affine_rank(points)
    if rank == 0:
        return points

    centered = (points - points.mean(axis=0)).astype(float)
    _, _, basis = np.linalg.svd(centered, full_matrices=False)
    coordinates = centered @ basis[:rank].T

    if rank == 1:
        indices = [int(np.argmin(coordinates[:, 0])), int(np.argmax(coordinates[:, 0]))]
    else:
        indices = sorted(ConvexHull(coordinates).vertices.tolist())

    return points[sorted(set(indices))]


class NewtonPolytope:
    """
    Convex hull of the exponent vectors of one polynomial, stored by its vertices
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        array = np.array(points, dtype=int)
        if array.ndim != 2 or len(array) == 0:
            raise InvalidArgumentException("Newton polytope needs a non empty list of exponent vectors")

        self.vertices: np.ndarray = _convex_position(array)
        self.dimension: int = _affine_rank(self.vertices)

    @property
    def ambient_dimension(self) -> int:
        return int(self.vertices.shape[1])

    @property
    def degenerate(self) -> bool:
        return self.dimension == 0

    def vertex_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(value) for value in vertex) for vertex in self.vertices}

    def __add__(self, other: "NewtonPolytope") -> "NewtonPolytope":
        sums = (self.vertices[:, None, :] + other.vertices[None, :, :]).reshape(-1, self.ambient_dimension)
        return NewtonPolytope(sums)

    def __repr__(self) -> str:
        return f"NewtonPolytope(vertices={sorted(self.vertex_set())})"


def newton_polytopes(system: PolynomialSystem) -> list[NewtonPolytope]:
    polytopes = []
    for index in range(len(system)):
        polytope = NewtonPolytope(list(system.evaluated_terms(index).keys()))
        if polytope.degenerate:
            shared_logger.warning("degenerate newton polytope", extra={"polynomial": index})

        polytopes.append(polytope)

    return polytopes


def volume(polytope: NewtonPolytope) -> sympy.Rational:
    """
    Exact Euclidean volume: sum of the simplex volumes of a Delaunay triangulation of the vertices
    """

    dimension = polytope.ambient_dimension
    vertices = polytope.vertices
    if polytope.dimension < dimension:
        return sympy.Integer(0)

    if dimension == 1:
        return sympy.Integer(int(vertices.max() - vertices.min()))

    total = sympy.Integer(0)
    for simplex in Delaunay(vertices.astype(float)).simplices:
        corners = vertices[simplex]
        edges = sympy.Matrix((corners[1:] - corners[0]).tolist())
        total += abs(edges.det())

    return total / sympy.factorial(dimension)


@elasticapm.capture_span()
def mixed_volume(polytopes: Sequence[NewtonPolytope], threads: int = 1) -> int:
    """
    Normalized mixed volume by inclusion-exclusion over the Minkowski sums of all non empty subsets
    """

    dimension = len(polytopes)
    if dimension == 0:
        raise InvalidArgumentException("Mixed volume needs at least one polytope")

    if any(polytope.ambient_dimension != dimension for polytope in polytopes):
        raise InvalidArgumentException(f"Mixed volume needs {dimension} polytopes in dimension {dimension}")

    if dimension > _max_mixed_volume_dimension:
        raise UnsupportedException(
            f"Mixed volume supports dimension up to {_max_mixed_volume_dimension}, given: {dimension}"
        )

    subsets = [
        subset for size in range(1, dimension + 1) for subset in itertools.combinations(range(dimension), size)
    ]

    def _signed_volume(subset: tuple[int, ...]) -> sympy.Rational:
        total = polytopes[subset[0]]
        for index in subset[1:]:
            total = total + polytopes[index]

        return (-1) ** (dimension - len(subset)) * volume(total)

    with ThreadPoolExecutor(max_workers=threads) as executor:
        result = sum(executor.map(_signed_volume, subsets), sympy.Integer(0))

    if not result.is_integer:
        raise InvalidArgumentException(f"Mixed volume is not an integer: {result}")

    return int(result)
