# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import hashlib
import itertools
from typing import Optional

from share import UnsupportedException

from .graph import Edge, Graph

_bruteforce_max_vertices: int = 8


class CanonicalLabel:
    """
    Relabeling-invariant encoding of a graph.
    Two graphs have equal labels iff they are isomorphic
    """

    __slots__ = ("_raw",)

    def __init__(self, raw: bytes):
        self._raw = raw

    @property
    def bytes(self) -> bytes:
        return self._raw

    @property
    def short(self) -> str:
        """
        Short hex digest used as graph id in catalogs and result files
        """

        return hashlib.sha1(self._raw).hexdigest()[:12]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalLabel):
            return NotImplemented

        return self._raw == other._raw

    def __lt__(self, other: "CanonicalLabel") -> bool:
        return self._raw < other._raw

    def __hash__(self) -> int:
        return hash(self._raw)

    def __repr__(self) -> str:
        return f"CanonicalLabel({self.short})"


def _encode(n: int, code: tuple[Edge, ...]) -> bytes:
    return bytes([n]) + bytes(vertex for edge in code for vertex in edge)


def _refine(adjacency: list[list[int]], colors: list[int]) -> list[int]:
    """
    Colour refinement: splits cells by the multiset of neighbour colours until stable.
    New colours are ranks of sorted signatures, so the result does not depend on labels
    """

    cells = len(set(colors))
    while True:
        signatures = [
            (colors[vertex], tuple(sorted(colors[neighbor] for neighbor in adjacency[vertex])))
            for vertex in range(len(adjacency))
        ]
        ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        refined = [ranking[signature] for signature in signatures]

        if len(ranking) == cells:
            return refined

        colors = refined
        cells = len(ranking)


def _leaf_code(edges: list[Edge], colors: list[int]) -> tuple[Edge, ...]:
    relabeled = []
    for i, j in edges:
        a, b = colors[i], colors[j]
        relabeled.append((a, b) if a < b else (b, a))

    return tuple(sorted(relabeled))


def _search(
    adjacency: list[list[int]], edges: list[Edge], colors: list[int], best: Optional[tuple[Edge, ...]]
) -> tuple[Edge, ...]:
    colors = _refine(adjacency, colors)
    n = len(adjacency)

    if len(set(colors)) == n:
        code = _leaf_code(edges, colors)
        return code if best is None or code < best else best

    cell_sizes: dict[int, int] = {}
    for color in colors:
        cell_sizes[color] = cell_sizes.get(color, 0) + 1

    target = min(color for color, size in cell_sizes.items() if size > 1)

    for vertex in range(n):
        if colors[vertex] != target:
            continue

        individualized = [2 * color + 1 for color in colors]
        individualized[vertex] = 2 * colors[vertex]
        best = _search(adjacency, edges, individualized, best)

    assert best is not None
    return best


def canonical_form(graph: Graph) -> CanonicalLabel:
    """
    Canonical label by partition refinement with backtracking over the residual cells.
    The label is the smallest edge code over all leaves of the search tree
    """

    n = graph.n
    adjacency: list[list[int]] = [[] for _ in range(n)]
    edges: list[Edge] = []
    for i, j in graph.edges:
        adjacency[i - 1].append(j - 1)
        adjacency[j - 1].append(i - 1)
        edges.append((i - 1, j - 1))

    initial = [len(neighbors) for neighbors in adjacency]
    code = _search(adjacency, edges, initial, None)

    return CanonicalLabel(_encode(n, code))


def canonical_graph(graph: Graph) -> Graph:
    """
    The representative of the isomorphism class of graph, decoded from its canonical label
    """

    return decode_label(canonical_form(graph))


def decode_label(label: CanonicalLabel) -> Graph:
    raw = label.bytes
    n = raw[0]
    flat = list(raw[1:])

    return Graph(n, [(flat[index] + 1, flat[index + 1] + 1) for index in range(0, len(flat), 2)])


def canonical_form_bruteforce(graph: Graph) -> CanonicalLabel:
    """
    Reference labeling over all vertex permutations, small graphs only
    """

    n = graph.n
    if n > _bruteforce_max_vertices:
        raise UnsupportedException(f"Brute force canonical form supports up to {_bruteforce_max_vertices} vertices")

    degrees = graph.degrees()
    edges = [(i - 1, j - 1) for i, j in graph.edges]
    best: Optional[tuple[Edge, ...]] = None

    # positions are only assigned within equal-degree classes, ordered by degree,
    # which is what the refinement search does as its first step
    classes: dict[int, list[int]] = {}
    for vertex in graph.vertices:
        classes.setdefault(degrees[vertex], []).append(vertex - 1)

    ordered_classes = [classes[degree] for degree in sorted(classes)]
    for arrangement in itertools.product(*(itertools.permutations(members) for members in ordered_classes)):
        colors = [0] * n
        position = 0
        for members in arrangement:
            for vertex in members:
                colors[vertex] = position
                position += 1

        code = _leaf_code(edges, colors)
        if best is None or code < best:
            best = code

    assert best is not None
    return CanonicalLabel(_encode(n, best))
