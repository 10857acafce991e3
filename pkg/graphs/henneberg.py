# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Sequence

from share import InvalidArgumentException

from .graph import Edge, Graph, edge_key, normalize_edge

_available_h3_variants: list[str] = ["x", "v"]


def _check_vertices(graph: Graph, vertices: Sequence[int], expected: int, what: str) -> None:
    if len(vertices) != expected:
        raise InvalidArgumentException(f"{what} must be {expected} vertices, given: {list(vertices)}")

    if len(set(vertices)) != len(vertices):
        raise InvalidArgumentException(f"{what} must be distinct, given: {list(vertices)}")

    for vertex in vertices:
        if vertex not in graph.vertices:
            raise InvalidArgumentException(f"{what}: vertex {vertex} not in graph")


def henneberg_h1(graph: Graph, targets: Sequence[int]) -> Graph:
    """
    H1: adds vertex n+1 of degree 3 joined to the three targets
    """

    _check_vertices(graph, targets, 3, "H1 targets")

    new_vertex = graph.n + 1
    return Graph(new_vertex, list(graph.edges) + [(target, new_vertex) for target in targets])


def henneberg_h2(graph: Graph, removed: Edge, extra: Sequence[int]) -> Graph:
    """
    H2: deletes the edge uv and joins a new vertex to u, v and two other vertices
    """

    u, v = normalize_edge(*removed)
    if not graph.has_edge(u, v):
        raise InvalidArgumentException(f"H2 removed edge {edge_key((u, v))} not in graph")

    _check_vertices(graph, extra, 2, "H2 extra vertices")
    if u in extra or v in extra:
        raise InvalidArgumentException(f"H2 extra vertices must differ from {u} and {v}, given: {list(extra)}")

    new_vertex = graph.n + 1
    edges = [edge for edge in graph.edges if edge != (u, v)]
    edges += [(target, new_vertex) for target in (u, v, *extra)]

    return Graph(new_vertex, edges)


def henneberg_h3(graph: Graph, variant: str, removed: Sequence[Edge], attach: Sequence[int]) -> Graph:
    """
    H3x (X-replacement) and H3v (double V-replacement): two edges deleted, a new vertex of degree 5.
    H3x removes two disjoint edges ab, cd and attaches one more vertex e;
    H3v removes two edges ab, ac sharing one vertex and attaches two more vertices d, e
    """

    if variant not in _available_h3_variants:
        raise InvalidArgumentException(f"H3 variant must be one of {','.join(_available_h3_variants)}")

    if len(removed) != 2:
        raise InvalidArgumentException(f"H3 must remove exactly 2 edges, given: {list(removed)}")

    first, second = (normalize_edge(*edge) for edge in removed)
    if first == second:
        raise InvalidArgumentException("H3 removed edges must be distinct")

    for edge in (first, second):
        if not graph.has_edge(*edge):
            raise InvalidArgumentException(f"H3 removed edge {edge_key(edge)} not in graph")

    shared = set(first) & set(second)
    if variant == "x":
        if shared:
            raise InvalidArgumentException("H3x removed edges must be disjoint")

        expected_attach = 1
    else:
        if len(shared) != 1:
            raise InvalidArgumentException("H3v removed edges must share exactly one vertex")

        expected_attach = 2

    endpoints = sorted(set(first) | set(second))
    _check_vertices(graph, attach, expected_attach, f"H3{variant} attached vertices")
    if set(attach) & set(endpoints):
        raise InvalidArgumentException(f"H3{variant} attached vertices must differ from the removed edges endpoints")

    new_vertex = graph.n + 1
    edges = [edge for edge in graph.edges if edge not in (first, second)]
    edges += [(target, new_vertex) for target in (*endpoints, *attach)]

    return Graph(new_vertex, edges)
