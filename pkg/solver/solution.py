# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import copy
import json
from typing import Any, Iterator, Optional, Sequence

import numpy as np

from share import Tolerances, shared_logger

SOLUTION_REFINED: str = "refined"
SOLUTION_FAILED: str = "failed"

_sort_decimals: int = 8


class Solution:
    """
    One refined solution of a polynomial system
    """

    def __init__(
        self,
        values: Sequence[complex],
        residual: float,
        status: str = SOLUTION_REFINED,
        multiplicity: int = 1,
        tolerances: Optional[Tolerances] = None,
    ):
        self.values = np.asarray(values, dtype=complex)
        self.residual = float(residual)
        self.status = status
        self.multiplicity = multiplicity

        tolerances = tolerances or Tolerances()
        imaginary = self.max_imaginary
        self.is_real: bool = status == SOLUTION_REFINED and imaginary <= tolerances.real
        self.near_real: bool = tolerances.real < imaginary <= tolerances.near_real

    @property
    def max_imaginary(self) -> float:
        return float(np.abs(self.values.imag).max()) if self.values.size else 0.0

    @property
    def failed(self) -> bool:
        return self.status == SOLUTION_FAILED

    def real_values(self) -> np.ndarray:
        return self.values.real.copy()

    def sort_key(self) -> tuple[float, ...]:
        rounded = np.round(self.values, _sort_decimals)
        return tuple(float(part) for value in rounded for part in (value.real, value.imag))

    def to_dict(self) -> dict[str, Any]:
        return {
            "values": [[value.real, value.imag] for value in self.values],
            "residual": self.residual,
            "real": self.is_real,
            "multiplicity": self.multiplicity,
        }

    def __repr__(self) -> str:
        return f"Solution(real={self.is_real}, residual={self.residual:.3g}, values={self.values.tolist()})"


def deduplicate(solutions: Sequence[Solution], tolerances: Optional[Tolerances] = None) -> list[Solution]:
    """
    Merges solutions closer than the dedupe tolerance relative to their size, summing multiplicities.
    Output is sorted lexicographically by rounded coordinates
    """

    tolerances = tolerances or Tolerances()
    kept: list[Solution] = []
    for solution in sorted(solutions, key=lambda item: (item.sort_key(), item.residual)):
        scale = 1.0 + float(np.linalg.norm(solution.values))
        duplicate = next(
            (
                other
                for other in kept
                if float(np.linalg.norm(other.values - solution.values)) <= tolerances.dedupe * scale
            ),
            None,
        )

        if duplicate is None:
            kept.append(copy.copy(solution))
        else:
            duplicate.multiplicity += solution.multiplicity

    merged = [solution for solution in kept if solution.multiplicity > 1]
    if merged:
        shared_logger.debug("paths merged", extra={"solutions": len(merged)})

    return kept


class SolutionSet:
    """
    Deduplicated refined solutions with their counts and provenance
    """

    def __init__(
        self,
        solutions: Sequence[Solution],
        formulation: str,
        lengths_digest: str = "",
        seed: int = 0,
        paths: int = 0,
        diverged: int = 0,
        failed: int = 0,
        tolerances: Optional[Tolerances] = None,
    ):
        self.tolerances = tolerances or Tolerances()
        self.solutions: list[Solution] = deduplicate(
            [solution for solution in solutions if not solution.failed], self.tolerances
        )
        self.formulation = formulation
        self.lengths_digest = lengths_digest
        self.seed = seed
        self.paths = paths
        self.diverged = diverged
        self.failed = failed

        near_real = [solution for solution in self.solutions if solution.near_real]
        if near_real:
            shared_logger.warning(
                "near real solutions",
                extra={
                    "count": len(near_real),
                    "max_imaginary": [solution.max_imaginary for solution in near_real],
                },
            )

    @property
    def complex_count(self) -> int:
        return len(self.solutions)

    @property
    def real_count(self) -> int:
        return sum(1 for solution in self.solutions if solution.is_real)

    @property
    def provenance(self) -> dict[str, Any]:
        return {"formulation": self.formulation, "lengths": self.lengths_digest, "seed": self.seed}

    def real_solutions(self) -> list[Solution]:
        return [solution for solution in self.solutions if solution.is_real]

    def values(self) -> np.ndarray:
        if not self.solutions:
            return np.zeros((0, 0), dtype=complex)

        return np.array([solution.values for solution in self.solutions])

    def merge(self, other: "SolutionSet") -> "SolutionSet":
        return SolutionSet(
            self.solutions + other.solutions,
            self.formulation,
            self.lengths_digest,
            self.seed,
            paths=self.paths + other.paths,
            diverged=self.diverged + other.diverged,
            failed=self.failed + other.failed,
            tolerances=self.tolerances,
        )

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[Solution]:
        return iter(self.solutions)

    def __repr__(self) -> str:
        return f"SolutionSet(complex={self.complex_count}, real={self.real_count}, formulation={self.formulation})"

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.provenance,
            "complex_count": self.complex_count,
            "real_count": self.real_count,
            "solutions": [solution.to_dict() for solution in self.solutions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
