# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import json
from unittest import TestCase

import pytest

from share import Tolerances
from solver import SOLUTION_FAILED, Solution, SolutionSet, deduplicate


@pytest.mark.unit
class TestSolution(TestCase):
    def test_classification(self) -> None:
        with self.subTest("real"):
            solution = Solution([1.0 + 1e-9j, 2.0], 1e-14)

            assert solution.is_real
            assert not solution.near_real

        with self.subTest("near real counts as non real"):
            solution = Solution([1.0 + 1e-5j, 2.0], 1e-14)

            assert not solution.is_real
            assert solution.near_real

        with self.subTest("complex"):
            solution = Solution([1.0 + 1e-2j], 1e-14)

            assert not solution.is_real
            assert not solution.near_real

        with self.subTest("failed is never real"):
            solution = Solution([1.0], 1.0, status=SOLUTION_FAILED)

            assert solution.failed
            assert not solution.is_real

        with self.subTest("custom tolerance"):
            assert Solution([1.0 + 1e-5j], 1e-14, tolerances=Tolerances(real=1e-4, near_real=1e-3)).is_real


@pytest.mark.unit
class TestDeduplicate(TestCase):
    def test_merge(self) -> None:
        solutions = [Solution([1.0, 2.0], 0.0), Solution([1.0 + 1e-12, 2.0], 0.0), Solution([-1.0, 2.0], 0.0)]
        kept = deduplicate(solutions)

        assert len(kept) == 2
        assert [solution.multiplicity for solution in kept] == [1, 2]
        assert kept[0].values[0].real == -1.0
        assert [solution.multiplicity for solution in solutions] == [1, 1, 1]


@pytest.mark.unit
class TestSolutionSet(TestCase):
    def test_counts(self) -> None:
        solutions = SolutionSet(
            [
                Solution([1.0], 0.0),
                Solution([1.0], 0.0),
                Solution([2.0j], 0.0),
                Solution([3.0], 1.0, status=SOLUTION_FAILED),
            ],
            "sphere",
            "digest",
            seed=5,
            paths=4,
        )

        assert solutions.complex_count == 2
        assert solutions.real_count == 1
        assert len(solutions.real_solutions()) == 1
        assert solutions.values().shape == (2, 1)
        assert solutions.provenance == {"formulation": "sphere", "lengths": "digest", "seed": 5}

    def test_merge(self) -> None:
        first = SolutionSet([Solution([1.0], 0.0)], "sphere", paths=2, diverged=1)
        second = SolutionSet([Solution([1.0], 0.0), Solution([-1.0], 0.0)], "sphere", paths=2, failed=1)
        merged = first.merge(second)

        assert merged.complex_count == 2
        assert (merged.paths, merged.diverged, merged.failed) == (4, 1, 1)

    def test_json(self) -> None:
        payload = json.loads(SolutionSet([Solution([1.0 + 2.0j], 0.0)], "cm").to_json())

        assert payload["complex_count"] == 1
        assert payload["real_count"] == 0
        assert payload["solutions"][0]["values"] == [[1.0, 2.0]]

    def test_empty_values(self) -> None:
        assert SolutionSet([], "sphere").values().shape == (0, 0)
