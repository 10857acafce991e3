# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from unittest import TestCase

import pytest

from graphs import Graph, SamplingSubgraph, complete_graph, edge_key, named_graph, normalize_edge, parse_edge_key
from share import InvalidArgumentException


@pytest.mark.unit
class TestGraph(TestCase):
    def test_init(self) -> None:
        with self.subTest("edges are normalized and sorted"):
            graph = Graph(3, [(3, 1), [2, 1], (2, 3)])

            assert graph.edges == ((1, 2), (1, 3), (2, 3))
            assert len(graph) == 3
            assert graph.n == 3
            assert list(graph.vertices) == [1, 2, 3]

        with self.subTest("vertex count not int"):
            with self.assertRaisesRegex(InvalidArgumentException, "Graph vertex count must be of type int"):
                Graph("4", [])  # type:ignore

        with self.subTest("fewer than 3 vertices"):
            for n in (0, 1, 2):
                with self.assertRaisesRegex(InvalidArgumentException, f"Graph needs at least 3 vertices, given: {n}"):
                    Graph(n, [])

        with self.subTest("self loop"):
            with self.assertRaisesRegex(InvalidArgumentException, "Self-loop not allowed: 2-2"):
                Graph(3, [(2, 2)])

        with self.subTest("edge out of range"):
            with self.assertRaisesRegex(InvalidArgumentException, "Edge 1-5 out of vertex range 1..4"):
                Graph(4, [(1, 5)])

        with self.subTest("duplicated edge"):
            with self.assertRaisesRegex(InvalidArgumentException, "Duplicated edge 1-2"):
                Graph(4, [(1, 2), (2, 1)])

        with self.subTest("not a pair"):
            with self.assertRaisesRegex(InvalidArgumentException, "Edge must be a pair of vertices"):
                Graph(4, [(1, 2, 3)])

    def test_edge_keys(self) -> None:
        assert normalize_edge(4, 2) == (2, 4)
        assert edge_key((2, 4)) == "2-4"
        assert parse_edge_key("2-4") == (2, 4)
        assert parse_edge_key(" 4-2 ") == (2, 4)

        with self.assertRaisesRegex(InvalidArgumentException, "Invalid edge key"):
            parse_edge_key("2:4")

    def test_equality(self) -> None:
        first = Graph(4, [(1, 2), (3, 4)])
        second = Graph(4, [(4, 3), (2, 1)])

        assert first == second
        assert hash(first) == hash(second)
        assert first != Graph(5, [(1, 2), (3, 4)])

    def test_adjacency(self) -> None:
        graph = named_graph("G48")

        assert graph.has_edge(2, 3)
        assert graph.has_edge(3, 2)
        assert not graph.has_edge(1, 7)
        assert not graph.has_edge(2, 2)
        assert graph.neighbors(2) == frozenset({1, 3, 6, 7})
        assert graph.degree(1) == 5
        assert graph.min_degree() == 4
        assert graph.non_edges() == [(1, 7), (2, 4), (2, 5), (3, 5), (3, 6), (4, 6)]
        assert graph.is_geiringer_count()

        with self.assertRaisesRegex(InvalidArgumentException, "Vertex 8 not in graph"):
            graph.neighbors(8)

    def test_triangles(self) -> None:
        assert complete_graph(4).triangles() == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        assert Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).triangles() == []

    def test_edits(self) -> None:
        graph = complete_graph(4)

        with self.subTest("with edges"):
            assert len(graph.without_edges([(1, 2)]).with_edges([(2, 1)])) == 6

        with self.subTest("without missing edge"):
            with self.assertRaisesRegex(InvalidArgumentException, "Edges not in graph: 1-5"):
                Graph(5, [(1, 2)]).without_edges([(1, 5)])

        with self.subTest("without vertex shifts labels"):
            path = Graph(4, [(1, 2), (2, 3), (3, 4)])

            assert path.without_vertex(2) == Graph(3, [(2, 3)])

        with self.subTest("relabel"):
            path = Graph(3, [(1, 2), (2, 3)])

            assert path.relabel({1: 2, 2: 1, 3: 3}) == Graph(3, [(1, 2), (1, 3)])

        with self.subTest("relabel not a permutation"):
            with self.assertRaisesRegex(InvalidArgumentException, "Relabeling must be a permutation of the vertices"):
                complete_graph(3).relabel({1: 1, 2: 1, 3: 3})

    def test_json(self) -> None:
        graph = named_graph("G16")

        assert Graph.from_json(graph.to_json()) == graph
        assert graph.to_dict()["vertices"] == 6

        with self.subTest("missing keys"):
            with self.assertRaisesRegex(InvalidArgumentException, "Graph json must provide `vertices` and `edges`"):
                Graph.from_dict({"edges": []})

        with self.subTest("edges not a list"):
            with self.assertRaisesRegex(InvalidArgumentException, "Graph json `edges` must be a list"):
                Graph.from_dict({"vertices": 3, "edges": "1-2"})

        with self.subTest("not an object"):
            with self.assertRaisesRegex(InvalidArgumentException, "Graph json must be an object"):
                Graph.from_json("[1, 2]")

    def test_networkx(self) -> None:
        nx_graph = named_graph("G48").to_networkx()

        assert nx_graph.number_of_nodes() == 7
        assert nx_graph.number_of_edges() == 15


@pytest.mark.unit
class TestSamplingSubgraph(TestCase):
    def test_parse(self) -> None:
        graph = named_graph("G48")

        with self.subTest("spherical read off the graph"):
            subgraph = SamplingSubgraph.parse("2,3,1,7,6", graph)

            assert subgraph.as_tuple() == (2, 3, 1, 7, 6)
            assert subgraph.spherical
            assert list(subgraph) == [2, 3, 1, 7, 6]

        with self.subTest("malformed"):
            with self.assertRaisesRegex(InvalidArgumentException, "Sampling subgraph must be given as u,v,w,p,c"):
                SamplingSubgraph.parse("2,3,1,7", graph)

        with self.subTest("not distinct"):
            with self.assertRaisesRegex(InvalidArgumentException, "Sampling subgraph vertices must be distinct"):
                SamplingSubgraph.parse("2,3,1,7,2")

        with self.subTest("wrong neighbours"):
            with self.assertRaisesRegex(InvalidArgumentException, "Neighbours of 1 must be exactly"):
                SamplingSubgraph.parse("1,2,3,4,5", graph)

        with self.subTest("missing vw edge"):
            with self.assertRaisesRegex(InvalidArgumentException, "must be in graph"):
                SamplingSubgraph.parse("2,3,6,7,1", graph)

    def test_validate_spherical_flag(self) -> None:
        graph = named_graph("G48")
        subgraph = SamplingSubgraph(2, 3, 1, 7, 6, spherical=False)

        with self.assertRaisesRegex(InvalidArgumentException, "Spherical flag must match presence of edge cw"):
            subgraph.validate(graph)
