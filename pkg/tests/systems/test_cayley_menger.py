# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools
from unittest import TestCase

import numpy as np
import pytest

from graphs import Graph, complete_graph, henneberg_h1, named_graph
from share import InvalidArgumentException, NotFoundException, Tolerances
from systems import (
    FORMULATION_CM,
    LengthAssignment,
    build_cm_matrix,
    check_inequalities,
    cm_parameters,
    cm_subsystem,
    evaluate_inequalities,
    find_cm_unknowns,
    generic_lengths,
    governing_subsets,
)
from systems.cayley_menger import _minor_gradient

_points = np.array(
    [
        [0.0, 0.0, 0.0],
        [1.2, 0.1, 0.0],
        [0.3, 1.1, 0.2],
        [0.4, 0.5, 1.3],
        [-0.7, 0.6, 0.9],
    ]
)


def _five_vertex() -> tuple[Graph, LengthAssignment]:
    graph = henneberg_h1(complete_graph(4), [1, 2, 3])
    return graph, LengthAssignment.from_points(graph, _points)


@pytest.mark.unit
class TestCayleyMengerMatrix(TestCase):
    def test_matrix(self) -> None:
        graph, lengths = _five_vertex()
        cm = build_cm_matrix(graph, lengths, [(5, 4)])

        assert cm.unknowns == [(4, 5)]
        assert cm.missing == []
        assert cm.matrix.shape == (6, 6)
        assert str(cm.matrix[4, 5]) == "x1"
        assert str(cm.matrix[1, 2]) == "D1_2"

        array = cm.numeric_array([2.5])
        assert array[4, 5] == 2.5
        assert array[0, 3] == 1
        assert array[1, 2] == pytest.approx(lengths.squared((1, 2)))

    def test_invalid_unknowns(self) -> None:
        graph, lengths = _five_vertex()

        with self.subTest("unknown is an edge"):
            with self.assertRaisesRegex(InvalidArgumentException, "Cayley-Menger unknown 1-2 is an edge of the graph"):
                build_cm_matrix(graph, lengths, [(1, 2)])

        with self.subTest("repeated unknown"):
            with self.assertRaisesRegex(InvalidArgumentException, "Cayley-Menger unknowns must be pairwise distinct"):
                build_cm_matrix(graph, lengths, [(4, 5), (5, 4)])


@pytest.mark.unit
class TestCayleyMengerSubsystem(TestCase):
    def test_five_vertex(self) -> None:
        graph, lengths = _five_vertex()
        system = cm_subsystem(graph, lengths, [(4, 5)])
        true_value = float(np.sum((_points[3] - _points[4]) ** 2))

        assert system.formulation == FORMULATION_CM
        assert system.variables == ["x1"]
        assert system.degrees() == [2]
        assert abs(system.evaluate([true_value])[0]) < 1e-9 * system.coefficient_scale()
        assert np.allclose(cm_parameters(graph, lengths).real, [lengths.squared(edge) for edge in graph.edges])

    def test_no_unknowns(self) -> None:
        graph = complete_graph(4)
        lengths = LengthAssignment.from_points(graph, _points[:4])
        system = cm_subsystem(graph, lengths, [])

        assert system.n_variables == 0
        assert system.n_parameters == 6

    def test_too_many_unknowns(self) -> None:
        graph, lengths = _five_vertex()

        with self.assertRaisesRegex(InvalidArgumentException, "At most 1 unknowns are allowed, given: 2"):
            cm_subsystem(graph.without_edges([(1, 2)]), lengths.restrict(graph), [(4, 5), (1, 2)])

    def test_gradient_at_singular_minor(self) -> None:
        graph, lengths = _five_vertex()
        cm = build_cm_matrix(graph, lengths, [(4, 5)])
        minor = ((1, 2, 3, 4, 5), (1, 2, 3, 4, 5))
        true_value = float(np.sum((_points[3] - _points[4]) ** 2))

        def _determinant(value: float) -> complex:
            return complex(np.linalg.det(cm.numeric_array([value])))

        step = 1e-5
        expected = (_determinant(true_value + step) - _determinant(true_value - step)) / (2 * step)
        gradient = _minor_gradient(cm, minor, np.array([true_value], dtype=complex))

        assert abs(_determinant(true_value)) < 1e-9
        assert np.all(np.isfinite(gradient))
        assert gradient[0] == pytest.approx(expected, rel=1e-5, abs=1e-8)

    def test_find_unknowns(self) -> None:
        graph, lengths = _five_vertex()

        assert find_cm_unknowns(graph, lengths) == [(4, 5)]
        assert find_cm_unknowns(complete_graph(4), lengths.restrict(complete_graph(4))) == []


@pytest.mark.unit
class TestInequalities(TestCase):
    def test_realizable(self) -> None:
        graph, lengths = _five_vertex()
        true_value = float(np.sum((_points[3] - _points[4]) ** 2))
        report = check_inequalities(graph, lengths, {(4, 5): true_value})

        assert report.satisfied
        assert report.checked == 10 + 10 + 5
        assert evaluate_inequalities(graph, lengths, {(4, 5): true_value})

    def test_violated_triangle(self) -> None:
        graph = complete_graph(3)
        lengths = LengthAssignment({(1, 2): 1.0, (1, 3): 1.0, (2, 3): 3.0})
        report = check_inequalities(graph, lengths, {})

        assert not report.satisfied
        assert report.violated == [(1, 2, 3)]

    def test_boundary_relative_to_largest_entry(self) -> None:
        graph = complete_graph(3)
        tolerances = Tolerances(inequality=1e-3)

        with self.subTest("inside the boundary band"):
            lengths = LengthAssignment({(1, 2): 1.0, (1, 3): 1.0, (2, 3): 2.0001})
            report = check_inequalities(graph, lengths, {}, tolerances)

            assert report.satisfied
            assert report.boundary == [(1, 2, 3)]

        with self.subTest("outside the boundary band"):
            lengths = LengthAssignment({(1, 2): 1.0, (1, 3): 1.0, (2, 3): 2.0005})
            report = check_inequalities(graph, lengths, {}, tolerances)

            assert report.violated == [(1, 2, 3)]

    def test_unknown_too_long(self) -> None:
        graph, lengths = _five_vertex()

        assert not evaluate_inequalities(graph, lengths, {(4, 5): 1e6})

    def test_governing_subsets(self) -> None:
        graph, _ = _five_vertex()

        assert governing_subsets(graph, [(4, 5)]) == [
            (1, 4, 5),
            (2, 4, 5),
            (3, 4, 5),
            (1, 2, 4, 5),
            (1, 3, 4, 5),
            (2, 3, 4, 5),
        ]


@pytest.mark.integration
class TestG48Subsystems(TestCase):
    def test_three_unknowns(self) -> None:
        graph = named_graph("G48")
        lengths = generic_lengths(graph, np.random.default_rng(1))

        assert find_cm_unknowns(graph, lengths) == [(1, 7), (2, 4), (2, 5)]

        system = cm_subsystem(graph, lengths, [(1, 7), (2, 4), (2, 5)])
        minors = system.metadata["minors"]

        assert system.n_variables == 3
        assert len(minors) == 3
        assert all(rows == columns for rows, columns in minors)

    def test_square_systems(self) -> None:
        graph = named_graph("G48")
        lengths = generic_lengths(graph, np.random.default_rng(2))
        found = []
        for unknowns in itertools.combinations(graph.non_edges(), 3):
            try:
                cm_subsystem(graph, lengths, list(unknowns))
            except NotFoundException:
                continue

            found.append(unknowns)

        assert len(found) == 5
        assert ((1, 7), (2, 4), (2, 5)) in found
        assert all((1, 7) in unknowns for unknowns in found)
