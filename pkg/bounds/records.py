# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Iterable, Mapping, Optional

from graphs import Graph, canonical_form, classify_last_step, complete_graph, named_graph
from share import InconsistencyException, InvalidArgumentException, shared_logger

PROVENANCE_DOUBLING: str = "doubling"
PROVENANCE_SOLVED: str = "solved"
PROVENANCE_PUBLISHED: str = "published"

_provenances: tuple[str, ...] = (PROVENANCE_DOUBLING, PROVENANCE_SOLVED, PROVENANCE_PUBLISHED)

# name -> (c3, r3), published maxima of graphs that no H1 step produces
_published_counts: dict[str, tuple[int, int]] = {
    "K4": (2, 2),
    "G16": (16, 16),
    "G48": (48, 48),
    "G32a": (32, 32),
    "G32b": (32, 32),
    "G24": (24, 24),
    "G16a": (16, 16),
    "G16b": (16, 16),
    "G128": (128, 128),
    "G160": (160, 132),
}


class CountRecord:
    """
    Maximum complex (c3) and real (r3) embedding counts of a graph, None when unknown
    """

    def __init__(
        self,
        label: str,
        c3: Optional[int],
        r3: Optional[int],
        provenance: str,
        n: Optional[int] = None,
        name: str = "",
    ):
        if provenance not in _provenances:
            raise InvalidArgumentException(f"Provenance must be one of {','.join(_provenances)}")

        if c3 is not None and r3 is not None and r3 > c3:
            raise InvalidArgumentException(f"Real count {r3} exceeds complex count {c3} for {label}")

        self.label = label
        self.c3 = c3
        self.r3 = r3
        self.provenance = provenance
        self.n = n
        self.name = name

    def doubled(self, label: str, n: Optional[int] = None) -> "CountRecord":
        return CountRecord(
            label,
            2 * self.c3 if self.c3 is not None else None,
            2 * self.r3 if self.r3 is not None else None,
            PROVENANCE_DOUBLING,
            n,
        )

    def counts(self) -> tuple[Optional[int], Optional[int]]:
        return self.c3, self.r3

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "name": self.name,
            "n": self.n,
            "c3": self.c3,
            "r3": self.r3,
            "provenance": self.provenance,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountRecord):
            return NotImplemented

        return (self.label, self.c3, self.r3, self.provenance) == (other.label, other.c3, other.r3, other.provenance)

    def __repr__(self) -> str:
        return f"CountRecord({self.label}, c3={self.c3}, r3={self.r3}, {self.provenance})"


def graph_label(graph: Graph) -> str:
    return canonical_form(graph).short


def published_records() -> dict[str, CountRecord]:
    """
    Published counts of K4, G16 and the H2-required graphs on 7 and 8 vertices, keyed by canonical label
    """

    records: dict[str, CountRecord] = {}
    for name, (c3, r3) in _published_counts.items():
        graph = complete_graph(4) if name == "K4" else named_graph(name)
        label = graph_label(graph)
        records[label] = CountRecord(label, c3, r3, PROVENANCE_PUBLISHED, graph.n, name)

    return records


def _h1_parents(graph: Graph) -> list[Graph]:
    return [graph.without_vertex(vertex) for vertex in graph.vertices if graph.degree(vertex) == 3]


def propagate_h1_doubling(catalog: Iterable[Graph], base: Mapping[str, CountRecord]) -> dict[str, CountRecord]:
    """
    Counts of every graph reachable from the base records by H1 steps: twice the counts of any parent obtained by
    deleting a degree-3 vertex. Graphs are visited by vertex count, so parents are settled before their children
    """

    known: dict[str, CountRecord] = dict(base)
    unresolved = 0

    for graph in sorted(catalog, key=lambda item: item.n):
        label = graph_label(graph)
        if label in known:
            continue

        candidates: list[CountRecord] = []
        for parent in _h1_parents(graph):
            parent_record = known.get(graph_label(parent))
            if parent_record is not None:
                candidates.append(parent_record.doubled(label, graph.n))

        if not candidates:
            unresolved += 1
            shared_logger.debug("counts unknown", extra={"label": label, "n": graph.n})
            continue

        distinct = {candidate.counts() for candidate in candidates}
        if len(distinct) > 1:
            raise InconsistencyException(f"Parents of {label} give conflicting doubled counts: {sorted(distinct)}")

        known[label] = candidates[0]

    if unresolved:
        shared_logger.warning("counts unknown", extra={"graphs": unresolved})

    return known


def classification_table(catalog: Iterable[Graph], records: Mapping[str, CountRecord]) -> list[dict[str, Any]]:
    """
    One row per catalog graph: label, n, lastStep, c3, r3, provenance (blank when unknown)
    """

    rows: list[dict[str, Any]] = []
    for graph in catalog:
        label = graph_label(graph)
        record = records.get(label)
        rows.append(
            {
                "label": label,
                "n": graph.n,
                "lastStep": classify_last_step(graph),
                "c3": record.c3 if record is not None and record.c3 is not None else "",
                "r3": record.r3 if record is not None and record.r3 is not None else "",
                "provenance": record.provenance if record is not None else "",
            }
        )

    return rows
