# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator, Optional

import elasticapm

from share import InvalidArgumentException, UnsupportedException, shared_logger

from .canonical import CanonicalLabel, canonical_form, decode_label
from .graph import Graph, complete_graph, edge_key, parse_edge_key
from .henneberg import henneberg_h1, henneberg_h2

_min_catalog_vertices: int = 4
_max_catalog_vertices: int = 12

LAST_STEP_H1: str = "H1-capable"
LAST_STEP_H2: str = "H2-required"


def _children(parent: Graph) -> Iterator[Graph]:
    """
    Every H1 and H2 extension of parent, isomorphic duplicates included
    """

    for targets in itertools.combinations(parent.vertices, 3):
        yield henneberg_h1(parent, targets)

    for removed in parent.edges:
        others = [vertex for vertex in parent.vertices if vertex not in removed]
        for extra in itertools.combinations(others, 2):
            yield henneberg_h2(parent, removed, extra)


def _labelled_children(parent: Graph) -> dict[CanonicalLabel, Graph]:
    found: dict[CanonicalLabel, Graph] = {}
    for child in _children(parent):
        label = canonical_form(child)
        if label not in found:
            found[label] = decode_label(label)

    return found


def _next_level(level: list[Graph], threads: int) -> list[Graph]:
    merged: dict[CanonicalLabel, Graph] = {}

    # map() yields in submission order, so the merge does not depend on scheduling
    with ThreadPoolExecutor(max_workers=threads) as executor:
        for found in executor.map(_labelled_children, level):
            for label, graph in found.items():
                merged.setdefault(label, graph)

    return [merged[label] for label in sorted(merged)]


@elasticapm.capture_span()
def generate_catalog(n: int, threads: int = 1) -> list[Graph]:
    """
    All non-isomorphic Geiringer graphs on n vertices, built level by level from K4 with H1 and H2 steps.
    Graphs are returned in their canonical labeling, sorted by canonical label
    """

    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidArgumentException("Catalog vertex count must be of type int")

    if n < _min_catalog_vertices or n > _max_catalog_vertices:
        raise UnsupportedException(
            f"Catalog vertex count must be between {_min_catalog_vertices} and {_max_catalog_vertices}, given: {n}"
        )

    level = [decode_label(canonical_form(complete_graph(4)))]
    for vertices in range(_min_catalog_vertices + 1, n + 1):
        level = _next_level(level, threads)
        shared_logger.info("catalog level", extra={"n": vertices, "graphs": len(level)})

    return level


def classify_last_step(graph: Graph) -> str:
    """
    A Geiringer graph with a degree-3 vertex comes from an H1 step, otherwise H2 is needed
    """

    return LAST_STEP_H1 if graph.min_degree() == 3 else LAST_STEP_H2


def format_catalog(graphs: Iterable[Graph]) -> str:
    """
    Newline-delimited `label<TAB>i-j,i-j,...` records
    """

    lines = []
    for graph in graphs:
        label = canonical_form(graph)
        lines.append(f"{label.short}\t{','.join(edge_key(edge) for edge in graph.edges)}")

    return "\n".join(lines) + "\n" if lines else ""


def parse_catalog(content: str, n: Optional[int] = None) -> list[Graph]:
    """
    Parses catalog records; the vertex count is the largest label unless given
    """

    graphs: list[Graph] = []
    for line_number, line in enumerate(content.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue

        parts = line.split("\t")
        if len(parts) != 2:
            raise InvalidArgumentException(f"Invalid catalog record at line {line_number}: `{line}`")

        edges = [parse_edge_key(key) for key in parts[1].split(",") if key]
        vertices = n if n is not None else max(max(edge) for edge in edges)
        graph = Graph(vertices, edges)

        if canonical_form(graph).short != parts[0]:
            shared_logger.warning("catalog label mismatch", extra={"line": line_number, "label": parts[0]})

        graphs.append(graph)

    return graphs
