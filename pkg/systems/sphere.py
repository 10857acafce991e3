# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import math
from typing import Optional, Sequence

import numpy as np

from graphs import Graph
from share import InfeasibleException, InvalidArgumentException, NotFoundException, shared_logger

from .lengths import LengthAssignment
from .polynomial import FORMULATION_SPHERE, PolynomialSystem, Term

_degenerate_relative: float = 1e-12


class FixedTriangle:
    """
    Coordinates of the fixed triangle: v1 at the origin, v2 on the positive y-axis, v3 in the xy-plane with x >= 0
    """

    def __init__(self, a: float, x3: float, y3: float, degenerate: bool):
        self.a = a
        self.x3 = x3
        self.y3 = y3
        self.degenerate = degenerate

    @property
    def points(self) -> np.ndarray:
        return np.array([[0.0, 0.0, 0.0], [0.0, self.a, 0.0], [self.x3, self.y3, 0.0]])

    def __repr__(self) -> str:
        return f"FixedTriangle(a={self.a}, x3={self.x3}, y3={self.y3}, degenerate={self.degenerate})"


def fixed_triangle_coordinates(d12: float, d13: float, d23: float) -> FixedTriangle:
    """
    Solves x3^2 + y3^2 = d13^2 and x3^2 + (y3 - d12)^2 = d23^2 with x3 >= 0
    """

    for name, value in (("d12", d12), ("d13", d13), ("d23", d23)):
        if value <= 0:
            raise InvalidArgumentException(f"Triangle length {name} must be positive, given: {value}")

    y3 = (d12**2 + d13**2 - d23**2) / (2 * d12)
    squared = d13**2 - y3**2

    if squared < -_degenerate_relative * d13**2:
        raise InfeasibleException(f"Triangle inequality violated by lengths {d12}, {d13}, {d23}")

    if squared <= _degenerate_relative * d13**2:
        shared_logger.warning("degenerate triangle", extra={"d12": d12, "d13": d13, "d23": d23})
        return FixedTriangle(d12, 0.0, y3, degenerate=True)

    return FixedTriangle(d12, math.sqrt(squared), y3, degenerate=False)


def default_triangle(graph: Graph) -> tuple[int, int, int]:
    triangles = graph.triangles()
    if not triangles:
        raise NotFoundException("Graph has no triangle")

    return triangles[0]


def _check_triangle(graph: Graph, triangle: Sequence[int]) -> tuple[int, int, int]:
    if len(triangle) != 3 or len(set(triangle)) != 3:
        raise InvalidArgumentException(f"Triangle must be 3 distinct vertices, given: {list(triangle)}")

    v1, v2, v3 = triangle
    for i, j in ((v1, v2), (v1, v3), (v2, v3)):
        if not graph.has_edge(i, j):
            raise InvalidArgumentException(f"Triangle edge {i}-{j} not in graph")

    return v1, v2, v3


def sphere_parameters(graph: Graph, lengths: LengthAssignment, triangle: Sequence[int]) -> np.ndarray:
    """
    Parameter vector (d12, x3, y3, squared lengths of the other edges) of a sphere system
    """

    v1, v2, v3 = _check_triangle(graph, triangle)
    frame = fixed_triangle_coordinates(lengths[(v1, v2)], lengths[(v1, v3)], lengths[(v2, v3)])
    fixed = {frozenset(pair) for pair in ((v1, v2), (v1, v3), (v2, v3))}

    values = [frame.a, frame.x3, frame.y3]
    values += [lengths.squared(edge) for edge in graph.edges if frozenset(edge) not in fixed]

    return np.array(values, dtype=complex)


def build_sphere_system(
    graph: Graph, lengths: LengthAssignment, triangle: Optional[Sequence[int]] = None
) -> PolynomialSystem:
    """
    x^2 + y^2 + z^2 = s for every free vertex and s_u + s_v - 2 <p_u, p_v> = d_uv^2 for every edge outside the
    fixed triangle; 4 (n - 3) variables and equations
    """

    v1, v2, v3 = _check_triangle(graph, triangle if triangle is not None else default_triangle(graph))
    lengths = lengths.restrict(graph)
    fixed_pairs = {frozenset(pair) for pair in ((v1, v2), (v1, v3), (v2, v3))}
    free = [vertex for vertex in graph.vertices if vertex not in (v1, v2, v3)]

    variables: list[str] = []
    position: dict[tuple[str, int], int] = {}
    for vertex in free:
        for axis in ("x", "y", "z", "s"):
            position[(axis, vertex)] = len(variables)
            variables.append(f"{axis}{vertex}")

    other_edges = [edge for edge in graph.edges if frozenset(edge) not in fixed_pairs]
    parameters = ["a", "x3", "y3"] + [f"D{i}_{j}" for i, j in other_edges]
    width = len(variables) + len(parameters)

    def term(*factors: tuple[int, int]) -> Term:
        exponents = [0] * width
        for index, power in factors:
            exponents[index] += power

        return tuple(exponents)

    a_index, x3_index, y3_index = len(variables), len(variables) + 1, len(variables) + 2

    polynomials: list[dict[Term, complex]] = []
    for vertex in free:
        polynomials.append(
            {
                term((position[("x", vertex)], 2)): 1,
                term((position[("y", vertex)], 2)): 1,
                term((position[("z", vertex)], 2)): 1,
                term((position[("s", vertex)], 1)): -1,
            }
        )

    for offset, (i, j) in enumerate(other_edges):
        squared_length = term((len(variables) + 3 + offset, 1))
        u, v = (i, j) if i in free else (j, i)

        polynomial: dict[Term, complex] = {term((position[("s", u)], 1)): 1, squared_length: -1}
        if v in free:
            polynomial[term((position[("s", v)], 1))] = 1
            for axis in ("x", "y", "z"):
                polynomial[term((position[(axis, u)], 1), (position[(axis, v)], 1))] = -2
        elif v == v2:
            polynomial[term((position[("y", u)], 1), (a_index, 1))] = -2
            polynomial[term((a_index, 2))] = 1
        elif v == v3:
            polynomial[term((position[("x", u)], 1), (x3_index, 1))] = -2
            polynomial[term((position[("y", u)], 1), (y3_index, 1))] = -2
            polynomial[term((x3_index, 2))] = 1
            polynomial[term((y3_index, 2))] = 1

        polynomials.append(polynomial)

    parameter_values = sphere_parameters(graph, lengths, (v1, v2, v3))
    frame = fixed_triangle_coordinates(lengths[(v1, v2)], lengths[(v1, v3)], lengths[(v2, v3)])

    return PolynomialSystem(
        variables,
        polynomials,
        parameters,
        parameter_values,
        formulation=FORMULATION_SPHERE,
        metadata={
            "triangle": (v1, v2, v3),
            "free": free,
            "n": graph.n,
            "degenerate": frame.degenerate,
        },
    )


def sphere_positions(system: PolynomialSystem, solution: np.ndarray) -> np.ndarray:
    """
    n x 3 positions (complex) of all vertices for one solution of a sphere system
    """

    _, v2, v3 = system.metadata["triangle"]
    values = system.parameter_values
    points = np.zeros((system.metadata["n"], 3), dtype=complex)
    points[v2 - 1] = [0, values[0], 0]
    points[v3 - 1] = [values[1], values[2], 0]

    for offset, vertex in enumerate(system.metadata["free"]):
        points[vertex - 1] = solution[4 * offset : 4 * offset + 3]

    return points
