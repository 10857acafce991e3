# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import json
from typing import Any, Optional

from graphs import Graph, parse_catalog
from share import InvalidArgumentException, shared_logger
from systems import LengthAssignment

from .storage import CommonStorage


def _load_json(storage: CommonStorage, what: str) -> Any:
    try:
        return json.loads(storage.get_as_string())
    except json.JSONDecodeError as e:
        raise InvalidArgumentException(f"Invalid {what} json in {storage.describe()}: {e}") from e


def read_graph(storage: CommonStorage) -> Graph:
    """
    Graph json: {"vertices": n, "edges": [[i, j], ...]}
    """

    graph = Graph.from_dict(_load_json(storage, "graph"))
    shared_logger.debug("graph read", extra={"source": storage.describe(), "n": graph.n})

    return graph


def read_lengths(storage: CommonStorage, graph: Optional[Graph] = None) -> LengthAssignment:
    """
    Length json: {"edges": {"i-j": value, ...}}, restricted to the edges of graph when given
    """

    lengths = LengthAssignment.from_dict(_load_json(storage, "lengths"))
    if graph is not None:
        lengths = lengths.restrict(graph)

    return lengths


def read_catalog(storage: CommonStorage, n: Optional[int] = None) -> list[Graph]:
    """
    Catalog records `label<TAB>i-j,...`, gzip inflated transparently
    """

    lines = [line.decode("utf-8") for line, _ in storage.get_by_lines()]
    graphs = parse_catalog("\n".join(lines), n)
    shared_logger.info("catalog read", extra={"source": storage.describe(), "graphs": len(graphs)})

    return graphs


def read_json(storage: CommonStorage) -> Any:
    return _load_json(storage, "checkpoint")
