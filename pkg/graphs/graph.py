# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools
import json
from typing import Any, Iterable, Iterator, Optional

import networkx as nx

from share import InvalidArgumentException

Edge = tuple[int, int]


def normalize_edge(i: int, j: int) -> Edge:
    """
    Returns the unordered pair {i, j} as (min, max)
    """

    if i == j:
        raise InvalidArgumentException(f"Self-loop not allowed: {i}-{j}")

    return (i, j) if i < j else (j, i)


def parse_edge_key(key: str) -> Edge:
    """
    Parses an "i-j" edge key as used by graph and length files
    """

    parts = key.split("-")
    if len(parts) != 2 or not parts[0].strip().isdigit() or not parts[1].strip().isdigit():
        raise InvalidArgumentException(f"Invalid edge key: `{key}`")

    return normalize_edge(int(parts[0]), int(parts[1]))


def edge_key(edge: Edge) -> str:
    return f"{edge[0]}-{edge[1]}"


class Graph:
    """
    Undirected simple graph on the vertices 1..n.
    Values are immutable once built: every operation returns a new Graph
    """

    __slots__ = ("_n", "_edges", "_edge_set", "_adjacency")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if isinstance(n, bool) or not isinstance(n, int):
            raise InvalidArgumentException("Graph vertex count must be of type int")

        if n < 3:
            raise InvalidArgumentException(f"Graph needs at least 3 vertices, given: {n}")

        normalized: set[Edge] = set()
        for raw_edge in edges:
            pair = tuple(raw_edge)
            if len(pair) != 2:
                raise InvalidArgumentException(f"Edge must be a pair of vertices, given: {raw_edge}")

            edge = normalize_edge(int(pair[0]), int(pair[1]))
            if edge[0] < 1 or edge[1] > n:
                raise InvalidArgumentException(f"Edge {edge_key(edge)} out of vertex range 1..{n}")

            if edge in normalized:
                raise InvalidArgumentException(f"Duplicated edge {edge_key(edge)}")

            normalized.add(edge)

        self._n: int = n
        self._edges: tuple[Edge, ...] = tuple(sorted(normalized))
        self._edge_set: frozenset[Edge] = frozenset(normalized)

        adjacency: dict[int, set[int]] = {vertex: set() for vertex in range(1, n + 1)}
        for i, j in self._edges:
            adjacency[i].add(j)
            adjacency[j].add(i)

        self._adjacency: dict[int, frozenset[int]] = {
            vertex: frozenset(neighbors) for vertex, neighbors in adjacency.items()
        }

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    def __len__(self) -> int:
        return len(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented

        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges=[{', '.join(edge_key(edge) for edge in self._edges)}])"

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False

        return j in self._adjacency.get(i, frozenset())

    def neighbors(self, vertex: int) -> frozenset[int]:
        if vertex not in self._adjacency:
            raise InvalidArgumentException(f"Vertex {vertex} not in graph")

        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.neighbors(vertex))

    def degrees(self) -> dict[int, int]:
        return {vertex: len(neighbors) for vertex, neighbors in self._adjacency.items()}

    def min_degree(self) -> int:
        return min(self.degrees().values())

    def non_edges(self) -> list[Edge]:
        """
        All unordered vertex pairs that are not edges, in lexicographic order
        """

        return [pair for pair in itertools.combinations(self.vertices, 2) if pair not in self._edge_set]

    def is_geiringer_count(self) -> bool:
        """
        Necessary edge count of a minimally rigid graph in R^3
        """

        return self._n >= 3 and len(self._edges) == 3 * self._n - 6

    def triangles(self) -> list[tuple[int, int, int]]:
        """
        All triangles as sorted vertex triples, in lexicographic order
        """

        cliques = nx.enumerate_all_cliques(self.to_networkx())
        found = [tuple(sorted(clique)) for clique in cliques if len(clique) == 3]

        return sorted(found)  # type:ignore

    def with_edges(self, added: Iterable[Edge]) -> "Graph":
        return Graph(self._n, list(self._edges) + [normalize_edge(*edge) for edge in added])

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        to_remove = {normalize_edge(*edge) for edge in removed}
        missing = [edge for edge in to_remove if edge not in self._edge_set]
        if missing:
            raise InvalidArgumentException(f"Edges not in graph: {', '.join(edge_key(edge) for edge in missing)}")

        return Graph(self._n, [edge for edge in self._edges if edge not in to_remove])

    def without_vertex(self, vertex: int) -> "Graph":
        """
        Deletes a vertex together with its edges, shifting higher labels down by one
        """

        if vertex not in self._adjacency:
            raise InvalidArgumentException(f"Vertex {vertex} not in graph")

        def _shift(label: int) -> int:
            return label - 1 if label > vertex else label

        return Graph(
            self._n - 1, [(_shift(i), _shift(j)) for i, j in self._edges if i != vertex and j != vertex]
        )

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """
        Applies a permutation of the vertex labels
        """

        if sorted(mapping.keys()) != list(self.vertices) or sorted(mapping.values()) != list(self.vertices):
            raise InvalidArgumentException("Relabeling must be a permutation of the vertices")

        return Graph(self._n, [(mapping[i], mapping[j]) for i, j in self._edges])

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        chosen = set(vertices)
        return [edge for edge in self._edges if edge[0] in chosen and edge[1] in chosen]

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices)
        nx_graph.add_edges_from(self._edges)

        return nx_graph

    def to_dict(self) -> dict[str, Any]:
        return {"vertices": self._n, "edges": [list(edge) for edge in self._edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(payload: dict[str, Any]) -> "Graph":
        if "vertices" not in payload or "edges" not in payload:
            raise InvalidArgumentException("Graph json must provide `vertices` and `edges`")

        if not isinstance(payload["edges"], list):
            raise InvalidArgumentException("Graph json `edges` must be a list")

        return Graph(payload["vertices"], payload["edges"])

    @staticmethod
    def from_json(graph_json: str) -> "Graph":
        payload = json.loads(graph_json)
        if not isinstance(payload, dict):
            raise InvalidArgumentException("Graph json must be an object")

        return Graph.from_dict(payload)


class SamplingSubgraph:
    """
    Vertices (u, v, w, p, c) of a subgraph suitable for coupler-curve sampling:
    pv, vw are edges and the neighbours of u are exactly v, w, p and c.
    The subgraph is spherical when cw is an edge too
    """

    __slots__ = ("u", "v", "w", "p", "c", "spherical")

    def __init__(self, u: int, v: int, w: int, p: int, c: int, spherical: bool):
        if len({u, v, w, p, c}) != 5:
            raise InvalidArgumentException(f"Sampling subgraph vertices must be distinct, given: {(u, v, w, p, c)}")

        self.u = u
        self.v = v
        self.w = w
        self.p = p
        self.c = c
        self.spherical = spherical

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.u, self.v, self.w, self.p, self.c)

    def __iter__(self) -> Iterator[int]:
        return iter(self.as_tuple())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SamplingSubgraph):
            return NotImplemented

        return self.as_tuple() == other.as_tuple() and self.spherical == other.spherical

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        return f"SamplingSubgraph({','.join(str(vertex) for vertex in self.as_tuple())}, spherical={self.spherical})"

    def validate(self, graph: Graph) -> None:
        """
        Checks the subgraph invariants against a graph
        """

        if graph.neighbors(self.u) != frozenset({self.v, self.w, self.p, self.c}):
            raise InvalidArgumentException(f"Neighbours of {self.u} must be exactly {self.v, self.w, self.p, self.c}")

        if not graph.has_edge(self.p, self.v) or not graph.has_edge(self.v, self.w):
            raise InvalidArgumentException(f"Edges {self.p}-{self.v} and {self.v}-{self.w} must be in graph")

        if self.spherical != graph.has_edge(self.c, self.w):
            raise InvalidArgumentException("Spherical flag must match presence of edge cw")

    @staticmethod
    def parse(value: str, graph: Optional[Graph] = None) -> "SamplingSubgraph":
        """
        Parses "u,v,w,p,c"; the spherical flag is read off the graph when given
        """

        parts = [part.strip() for part in value.split(",")]
        if len(parts) != 5 or not all(part.isdigit() for part in parts):
            raise InvalidArgumentException(f"Sampling subgraph must be given as u,v,w,p,c, given: `{value}`")

        u, v, w, p, c = (int(part) for part in parts)
        spherical = graph.has_edge(c, w) if graph is not None else True
        subgraph = SamplingSubgraph(u, v, w, p, c, spherical)
        if graph is not None:
            subgraph.validate(graph)

        return subgraph


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(1, n + 1), 2))
