# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools

from .graph import Graph, SamplingSubgraph


def suitable_subgraphs(graph: Graph) -> list[SamplingSubgraph]:
    """
    Every (u, v, w, p, c) with deg(u) = 4, N(u) = {v, w, p, c} and pv, vw edges, in tuple order.
    The pair {w, p} is unordered: w is the member adjacent to c, or the smaller label when both are
    """

    found: list[SamplingSubgraph] = []
    for u in graph.vertices:
        neighbors = graph.neighbors(u)
        if len(neighbors) != 4:
            continue

        for v in sorted(neighbors):
            others = sorted(neighbors - {v})
            for first, second in itertools.combinations(others, 2):
                if not graph.has_edge(v, first) or not graph.has_edge(v, second):
                    continue

                (c,) = [vertex for vertex in others if vertex not in (first, second)]
                if graph.has_edge(c, first):
                    w, p = first, second
                elif graph.has_edge(c, second):
                    w, p = second, first
                else:
                    w, p = first, second

                found.append(SamplingSubgraph(u, v, w, p, c, spherical=graph.has_edge(c, w)))

    return sorted(found, key=lambda subgraph: subgraph.as_tuple())


def spherical_subgraphs(graph: Graph) -> list[SamplingSubgraph]:
    return [subgraph for subgraph in suitable_subgraphs(graph) if subgraph.spherical]
