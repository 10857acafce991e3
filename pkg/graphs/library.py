# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from share import InvalidArgumentException

from .graph import Graph, complete_graph


def _from_keys(n: int, keys: str) -> Graph:
    return Graph(n, [(int(key[0]), int(key[1])) for key in keys.split()])


# labelings follow the published figures; edge keys are two digit vertex pairs
_definitions: dict[str, Graph] = {
    "K4": complete_graph(4),
    "G16": _from_keys(6, "12 13 15 16 23 24 26 34 35 45 46 56"),
    "G48": _from_keys(7, "23 34 26 45 56 12 14 13 15 16 27 47 37 57 67"),
    "G32a": _from_keys(7, "47 13 56 14 23 37 25 35 12 67 57 36 16 34 24"),
    "G32b": _from_keys(7, "12 47 26 45 14 56 13 23 37 25 27 67 15 36 34"),
    "G24": _from_keys(7, "12 47 26 56 14 13 23 37 25 27 46 57 15 36 34"),
    "G16a": _from_keys(7, "47 13 56 16 37 25 35 12 46 57 36 17 23 34 24"),
    "G16b": _from_keys(7, "12 47 26 45 14 13 23 37 25 35 27 67 46 15 36"),
    "G128": _from_keys(8, "23 34 27 45 56 67 12 14 13 15 16 17 28 48 38 58 68 78"),
    "G160": _from_keys(8, "12 27 47 26 68 45 28 57 34 14 15 13 16 56 37 78 23 58"),
}

# 7-vertex graphs that need an H2 step
h2_required_7: list[str] = ["G48", "G32a", "G32b", "G24", "G16a", "G16b"]


def named_graph(name: str) -> Graph:
    if name not in _definitions:
        raise InvalidArgumentException(f"Named graph must be one of {','.join(_definitions.keys())}")

    return _definitions[name]


def named_graphs() -> dict[str, Graph]:
    return dict(_definitions)
