# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np
import sympy

from graphs import Edge, Graph, edge_key, is_globally_rigid, normalize_edge, numerical_rank
from share import InvalidArgumentException, NotFoundException, Tolerances, shared_logger

from .lengths import LengthAssignment
from .polynomial import FORMULATION_CM, PolynomialSystem, terms_from_expression

# bordered minors of size D + 3 vanish on realizations in R^D
_minor_points: int = 5
_max_inequality_points: int = 4

Minor = tuple[tuple[int, ...], tuple[int, ...]]


class CayleyMengerMatrix:
    """
    Bordered (n+1) x (n+1) squared-distance matrix.
    Edges hold symbols D_i_j (numeric values in `values`), chosen non-edges the unknowns x1..xk,
    any other non-edge a placeholder symbol listed in `missing`
    """

    def __init__(self, graph: Graph, lengths: LengthAssignment, unknowns: Sequence[Edge]):
        normalized = [normalize_edge(*edge) for edge in unknowns]
        if len(set(normalized)) != len(normalized):
            raise InvalidArgumentException("Cayley-Menger unknowns must be pairwise distinct")

        for edge in normalized:
            if graph.has_edge(*edge):
                raise InvalidArgumentException(f"Cayley-Menger unknown {edge_key(edge)} is an edge of the graph")

        lengths = lengths.restrict(graph)
        self.graph = graph
        self.unknowns: list[Edge] = normalized
        self.unknown_symbols: list[sympy.Symbol] = [sympy.Symbol(f"x{k + 1}") for k in range(len(normalized))]
        self.edge_symbols: dict[Edge, sympy.Symbol] = {
            edge: sympy.Symbol(f"D{edge[0]}_{edge[1]}") for edge in graph.edges
        }
        self.values: dict[sympy.Symbol, float] = {
            symbol: lengths.squared(edge) for edge, symbol in self.edge_symbols.items()
        }
        self.missing: list[Edge] = [edge for edge in graph.non_edges() if edge not in normalized]

        entries: dict[Edge, sympy.Expr] = dict(self.edge_symbols)
        entries.update(dict(zip(normalized, self.unknown_symbols)))
        for i, j in self.missing:
            entries[(i, j)] = sympy.Symbol(f"m{i}_{j}")

        size = graph.n + 1
        matrix = sympy.zeros(size, size)
        for index in range(1, size):
            matrix[0, index] = 1
            matrix[index, 0] = 1

        for (i, j), entry in entries.items():
            matrix[i, j] = entry
            matrix[j, i] = entry

        self.matrix: sympy.Matrix = matrix

    def entry_pair(self, row: int, column: int) -> Optional[Edge]:
        if row == column:
            return None

        return normalize_edge(row, column)

    def numeric(self) -> sympy.Matrix:
        """
        Matrix with the edge values substituted
        """

        return self.matrix.subs(self.values)

    def numeric_array(self, unknown_values: Sequence[complex]) -> np.ndarray:
        size = self.graph.n + 1
        array = np.zeros((size, size), dtype=complex)
        array[0, 1:] = 1
        array[1:, 0] = 1

        for (i, j), symbol in self.edge_symbols.items():
            array[i, j] = array[j, i] = self.values[symbol]

        for (i, j), value in zip(self.unknowns, unknown_values):
            array[i, j] = array[j, i] = value

        return array


def build_cm_matrix(graph: Graph, lengths: LengthAssignment, unknowns: Sequence[Edge]) -> CayleyMengerMatrix:
    return CayleyMengerMatrix(graph, lengths, unknowns)


def _candidate_minors(n: int) -> Iterator[Minor]:
    """
    Principal minors first, then non-principal ones, each in lexicographic order of the point sets
    """

    subsets = list(itertools.combinations(range(1, n + 1), _minor_points))
    for subset in subsets:
        yield subset, subset

    for rows in subsets:
        for columns in subsets:
            if rows != columns:
                yield rows, columns


def _minor_pairs(minor: Minor) -> set[Edge]:
    rows, columns = minor
    return {normalize_edge(i, j) for i in rows for j in columns if i != j}


def _minor_gradient(cm: CayleyMengerMatrix, minor: Minor, point: np.ndarray) -> np.ndarray:
    """
    Gradient of the minor determinant in the unknowns at a point: sum of cofactors of the entries holding each unknown
    """

    rows = [0, *minor[0]]
    columns = [0, *minor[1]]
    block = cm.numeric_array(point)[np.ix_(rows, columns)]

    gradient = np.zeros(len(cm.unknowns), dtype=complex)
    for row_index, i in enumerate(rows):
        for column_index, j in enumerate(columns):
            pair = cm.entry_pair(i, j) if i and j else None
            if pair not in cm.unknowns:
                continue

            minor_block = np.delete(np.delete(block, row_index, axis=0), column_index, axis=1)
            cofactor = (-1) ** (row_index + column_index) * np.linalg.det(minor_block)
            gradient[cm.unknowns.index(pair)] += cofactor

    return gradient


def cm_subsystem(
    graph: Graph,
    lengths: LengthAssignment,
    unknowns: Sequence[Edge],
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
) -> PolynomialSystem:
    """
    Square system of bordered 6 x 6 minors of the Cayley-Menger matrix in the given unknowns.
    Minors are picked greedily to cover the unknowns, then to complete a Jacobian of full rank at a random point
    """

    tolerances = tolerances or Tolerances()
    if len(unknowns) > max(graph.n - 4, 0):
        raise InvalidArgumentException(f"At most {graph.n - 4} unknowns are allowed, given: {len(unknowns)}")

    cm = CayleyMengerMatrix(graph, lengths, unknowns)
    k = len(cm.unknowns)
    parameters = list(cm.edge_symbols.values())
    metadata = {"unknowns": [edge_key(edge) for edge in cm.unknowns], "n": graph.n}

    if k == 0:
        return PolynomialSystem(
            [],
            [],
            [str(symbol) for symbol in parameters],
            [cm.values[symbol] for symbol in parameters],
            formulation=FORMULATION_CM,
            metadata={**metadata, "minors": []},
        )

    rng = np.random.default_rng(seed)
    point = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    unknown_set = set(cm.unknowns)
    missing_set = set(cm.missing)

    candidates = []
    for minor in _candidate_minors(graph.n):
        pairs = _minor_pairs(minor)
        if pairs & missing_set or not pairs & unknown_set:
            continue

        candidates.append((minor, pairs & unknown_set))

    selected: list[Minor] = []
    gradients: list[np.ndarray] = []
    covered: set[Edge] = set()

    def _accept(minor: Minor) -> bool:
        gradient = _minor_gradient(cm, minor, point)
        if numerical_rank(np.array(gradients + [gradient]), tolerances.jacobian) <= len(gradients):
            return False

        selected.append(minor)
        gradients.append(gradient)
        return True

    for minor, involved in candidates:
        if len(selected) == k or covered == unknown_set:
            break

        if involved - covered and _accept(minor):
            covered |= involved

    for minor, involved in candidates:
        if len(selected) == k:
            break

        if minor not in selected and _accept(minor):
            covered |= involved

    if len(selected) < k or covered != unknown_set:
        raise NotFoundException(f"No square nonsingular Cayley-Menger subsystem in {metadata['unknowns']}")

    polynomials = []
    for rows, columns in selected:
        block = cm.matrix.extract([0, *rows], [0, *columns])
        polynomials.append(terms_from_expression(block.det(method="berkowitz"), cm.unknown_symbols, parameters))

    shared_logger.debug("cm subsystem", extra={"unknowns": metadata["unknowns"], "minors": [list(m) for m in selected]})

    return PolynomialSystem(
        [str(symbol) for symbol in cm.unknown_symbols],
        polynomials,
        [str(symbol) for symbol in parameters],
        [cm.values[symbol] for symbol in parameters],
        formulation=FORMULATION_CM,
        metadata={**metadata, "minors": [[list(rows), list(columns)] for rows, columns in selected]},
    )


def cm_parameters(graph: Graph, lengths: LengthAssignment) -> np.ndarray:
    """
    Squared edge lengths in edge order, the parameter vector of a Cayley-Menger subsystem
    """

    lengths = lengths.restrict(graph)
    return np.array([lengths.squared(edge) for edge in graph.edges], dtype=complex)


def find_cm_unknowns(
    graph: Graph, lengths: LengthAssignment, seed: int = 0, tolerances: Optional[Tolerances] = None
) -> list[Edge]:
    """
    First set of n - 4 non-edges, in lexicographic order, whose addition is globally rigid
    and which admits a square Cayley-Menger subsystem
    """

    size = max(graph.n - 4, 0)
    for added in itertools.combinations(graph.non_edges(), size):
        if not is_globally_rigid(graph.with_edges(added), seed=seed, tolerances=tolerances):
            continue

        try:
            cm_subsystem(graph, lengths, list(added), seed=seed, tolerances=tolerances)
        except NotFoundException:
            continue

        return list(added)

    raise NotFoundException(f"No Cayley-Menger subsystem with {size} unknowns")


def _bordered_determinant(points: Sequence[int], squared: Mapping[Edge, float]) -> tuple[float, float]:
    size = len(points) + 1
    block = np.zeros((size, size))
    block[0, 1:] = 1
    block[1:, 0] = 1
    for (a, i), (b, j) in itertools.combinations(enumerate(points, start=1), 2):
        block[a, b] = block[b, a] = squared[normalize_edge(i, j)]

    return float(np.linalg.det(block)), float(np.abs(block).max())


class InequalityReport:
    """
    Outcome of the sign conditions (-1)^k det(CM') >= -eps over all fully known point subsets
    """

    def __init__(self) -> None:
        self.checked: int = 0
        self.violated: list[tuple[int, ...]] = []
        self.boundary: list[tuple[int, ...]] = []

    @property
    def satisfied(self) -> bool:
        return not self.violated


def check_inequalities(
    graph: Graph,
    lengths: LengthAssignment,
    assignment: Mapping[Edge, float],
    tolerances: Optional[Tolerances] = None,
) -> InequalityReport:
    """
    Positivity, triangular and tetrangular conditions on every subset of 2 to 4 points whose pairs are all known.
    Unknown values in assignment are squared distances
    """

    tolerances = tolerances or Tolerances()
    squared: dict[Edge, float] = {edge: lengths.squared(edge) for edge in graph.edges}
    for edge, value in assignment.items():
        squared[normalize_edge(*edge)] = float(np.real(value))

    report = InequalityReport()
    for size in range(2, _max_inequality_points + 1):
        for points in itertools.combinations(graph.vertices, size):
            if any(pair not in squared for pair in itertools.combinations(points, 2)):
                continue

            determinant, scale = _bordered_determinant(points, squared)
            signed = (-1) ** size * determinant
            epsilon = tolerances.inequality * scale
            report.checked += 1

            if signed < -epsilon:
                report.violated.append(points)
            elif signed <= epsilon:
                report.boundary.append(points)

    if report.boundary:
        shared_logger.debug("inequality boundary", extra={"subsets": [list(p) for p in report.boundary]})

    return report


def evaluate_inequalities(
    graph: Graph,
    lengths: LengthAssignment,
    assignment: Mapping[Edge, float],
    tolerances: Optional[Tolerances] = None,
) -> bool:
    return check_inequalities(graph, lengths, assignment, tolerances).satisfied


def governing_subsets(graph: Graph, unknowns: Sequence[Edge]) -> list[tuple[int, ...]]:
    """
    Triangles and tetrahedra whose pairs are edges or unknowns, with at least one unknown among them
    """

    unknown_set = {normalize_edge(*edge) for edge in unknowns}
    found = []
    for size in (3, 4):
        for points in itertools.combinations(graph.vertices, size):
            pairs = set(itertools.combinations(points, 2))
            if not pairs & unknown_set:
                continue

            if all(graph.has_edge(*pair) or pair in unknown_set for pair in pairs):
                found.append(points)

    return found
