# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from unittest import TestCase

import pytest

from graphs import complete_graph, henneberg_h1, henneberg_h2, henneberg_h3
from share import InvalidArgumentException


@pytest.mark.unit
class TestHennebergH1(TestCase):
    def test_h1(self) -> None:
        with self.subTest("K4 to the 5-vertex Geiringer graph"):
            graph = henneberg_h1(complete_graph(4), [1, 2, 3])

            assert graph.n == 5
            assert len(graph) == 9
            assert graph.is_geiringer_count()
            assert graph.neighbors(5) == frozenset({1, 2, 3})
            assert graph.non_edges() == [(4, 5)]

        with self.subTest("targets not distinct"):
            with self.assertRaisesRegex(InvalidArgumentException, "H1 targets must be distinct"):
                henneberg_h1(complete_graph(4), [1, 1, 2])

        with self.subTest("wrong number of targets"):
            with self.assertRaisesRegex(InvalidArgumentException, "H1 targets must be 3 vertices"):
                henneberg_h1(complete_graph(4), [1, 2])

        with self.subTest("target out of graph"):
            with self.assertRaisesRegex(InvalidArgumentException, "H1 targets: vertex 9 not in graph"):
                henneberg_h1(complete_graph(4), [1, 2, 9])


@pytest.mark.unit
class TestHennebergH2(TestCase):
    def test_h2(self) -> None:
        with self.subTest("edge replaced by a degree 4 vertex"):
            graph = henneberg_h2(complete_graph(4), (2, 1), [3, 4])

            assert graph.n == 5
            assert len(graph) == 9
            assert not graph.has_edge(1, 2)
            assert graph.neighbors(5) == frozenset({1, 2, 3, 4})

        with self.subTest("edge not in graph"):
            with self.assertRaisesRegex(InvalidArgumentException, "H2 removed edge 4-5 not in graph"):
                henneberg_h2(henneberg_h1(complete_graph(4), [1, 2, 3]), (4, 5), [1, 2])

        with self.subTest("extra vertex on the removed edge"):
            with self.assertRaisesRegex(InvalidArgumentException, "H2 extra vertices must differ from 1 and 2"):
                henneberg_h2(complete_graph(4), (1, 2), [2, 3])


@pytest.mark.unit
class TestHennebergH3(TestCase):
    def test_h3x(self) -> None:
        base = henneberg_h1(complete_graph(4), [1, 2, 3])

        with self.subTest("two disjoint edges and one attached vertex"):
            graph = henneberg_h3(base, "x", [(1, 2), (3, 4)], [5])

            assert graph.n == 6
            assert graph.is_geiringer_count()
            assert graph.neighbors(6) == frozenset({1, 2, 3, 4, 5})
            assert not graph.has_edge(1, 2)
            assert not graph.has_edge(3, 4)

        with self.subTest("edges sharing a vertex"):
            with self.assertRaisesRegex(InvalidArgumentException, "H3x removed edges must be disjoint"):
                henneberg_h3(base, "x", [(1, 2), (1, 3)], [5])

        with self.subTest("attached vertex on a removed edge"):
            with self.assertRaisesRegex(InvalidArgumentException, "must differ from the removed edges endpoints"):
                henneberg_h3(base, "x", [(1, 2), (3, 4)], [4])

    def test_h3v(self) -> None:
        base = henneberg_h1(complete_graph(4), [1, 2, 3])

        with self.subTest("two edges sharing a vertex and two attached vertices"):
            graph = henneberg_h3(base, "v", [(1, 2), (1, 3)], [4, 5])

            assert graph.n == 6
            assert graph.is_geiringer_count()
            assert graph.degree(6) == 5

        with self.subTest("disjoint edges"):
            with self.assertRaisesRegex(InvalidArgumentException, "H3v removed edges must share exactly one vertex"):
                henneberg_h3(base, "v", [(1, 2), (3, 4)], [5, 1])

        with self.subTest("unknown variant"):
            with self.assertRaisesRegex(InvalidArgumentException, "H3 variant must be one of x,v"):
                henneberg_h3(base, "y", [(1, 2), (3, 4)], [5])

        with self.subTest("same edge twice"):
            with self.assertRaisesRegex(InvalidArgumentException, "H3 removed edges must be distinct"):
                henneberg_h3(base, "v", [(1, 2), (2, 1)], [4, 5])
