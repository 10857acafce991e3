# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import hashlib
import json
import math
from typing import Any, Iterator, Mapping, Optional

import numpy as np

from graphs import Edge, Graph, edge_key, normalize_edge, parse_edge_key, random_realization
from share import InvalidArgumentException

_generic_perturbation: float = 0.05
_max_draws: int = 100


class LengthAssignment:
    """
    Positive length per edge.
    Values are immutable: updates return a new assignment
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Edge, float]):
        normalized: dict[Edge, float] = {}
        for raw_edge, raw_value in values.items():
            edge = normalize_edge(*raw_edge)
            if isinstance(raw_value, bool) or not isinstance(raw_value, (int, float, np.floating)):
                raise InvalidArgumentException(f"Length of {edge_key(edge)} must be of type float")

            value = float(raw_value)
            if not math.isfinite(value) or value <= 0:
                raise InvalidArgumentException(f"Length of {edge_key(edge)} must be positive, given: {value}")

            normalized[edge] = value

        self._values: dict[Edge, float] = dict(sorted(normalized.items()))

    @property
    def edges(self) -> list[Edge]:
        return list(self._values.keys())

    def __getitem__(self, edge: Edge) -> float:
        key = normalize_edge(*edge)
        if key not in self._values:
            raise InvalidArgumentException(f"No length for edge {edge_key(key)}")

        return self._values[key]

    def __contains__(self, edge: object) -> bool:
        if not isinstance(edge, tuple) or len(edge) != 2:
            return False

        return normalize_edge(*edge) in self._values

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LengthAssignment):
            return NotImplemented

        return self._values == other._values

    def __repr__(self) -> str:
        return f"LengthAssignment({', '.join(f'{edge_key(e)}={v:.6g}' for e, v in self._values.items())})"

    def items(self) -> list[tuple[Edge, float]]:
        return list(self._values.items())

    def squared(self, edge: Edge) -> float:
        return self[edge] ** 2

    def with_values(self, updates: Mapping[Edge, float]) -> "LengthAssignment":
        values = dict(self._values)
        for edge, value in updates.items():
            values[normalize_edge(*edge)] = value

        return LengthAssignment(values)

    def restrict(self, graph: Graph) -> "LengthAssignment":
        """
        Lengths of exactly the edges of graph; a missing edge is an error
        """

        missing = [edge for edge in graph.edges if edge not in self._values]
        if missing:
            raise InvalidArgumentException(f"Missing lengths for edges {', '.join(edge_key(edge) for edge in missing)}")

        return LengthAssignment({edge: self._values[edge] for edge in graph.edges})

    def ordering_key(self) -> tuple[float, ...]:
        """
        Lengths vector in edge order, used for lexicographic tie-breaks
        """

        return tuple(self._values.values())

    def digest(self) -> str:
        canonical = json.dumps([[edge_key(edge), repr(value)] for edge, value in self._values.items()])
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]

    def to_dict(self) -> dict[str, Any]:
        return {"edges": {edge_key(edge): value for edge, value in self._values.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_dict(payload: dict[str, Any]) -> "LengthAssignment":
        if not isinstance(payload, dict) or not isinstance(payload.get("edges"), dict):
            raise InvalidArgumentException("Lengths json must provide an `edges` mapping")

        return LengthAssignment({parse_edge_key(key): value for key, value in payload["edges"].items()})

    @staticmethod
    def from_json(lengths_json: str) -> "LengthAssignment":
        return LengthAssignment.from_dict(json.loads(lengths_json))

    @staticmethod
    def from_points(graph: Graph, points: np.ndarray) -> "LengthAssignment":
        """
        Edge distances induced by a realization, one row per vertex
        """

        return LengthAssignment(
            {(i, j): float(np.linalg.norm(points[i - 1] - points[j - 1])) for i, j in graph.edges}
        )


def generic_lengths(
    graph: Graph, rng: Optional[np.random.Generator] = None, perturbation: float = _generic_perturbation
) -> LengthAssignment:
    """
    Distances of a random unit-box realization,
    each multiplied by (1 + u) with u uniform in [-perturbation, perturbation]
    """

    rng = rng if rng is not None else np.random.default_rng(0)

    # perturbing a thin triangle can break its triangle inequality, redraw then
    for _ in range(_max_draws):
        induced = LengthAssignment.from_points(graph, random_realization(graph.n, rng))
        lengths = LengthAssignment(
            {edge: value * (1.0 + rng.uniform(-perturbation, perturbation)) for edge, value in induced.items()}
        )

        if all(_strict_triangle(lengths, triangle) for triangle in graph.triangles()):
            return lengths

    raise InvalidArgumentException(f"No feasible generic lengths after {_max_draws} draws")


def _strict_triangle(lengths: LengthAssignment, triangle: tuple[int, int, int]) -> bool:
    i, j, k = triangle
    a, b, c = sorted([lengths[(i, j)], lengths[(i, k)], lengths[(j, k)]])

    return a + b > c
