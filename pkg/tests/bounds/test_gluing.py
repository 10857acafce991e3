# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from unittest import TestCase

import pytest

from bounds import asymptotic_base, glue_bound, glue_lower_bound, nth_root
from share import InvalidArgumentException


@pytest.mark.unit
class TestGlueBound(TestCase):
    def test_g128_along_triangle(self) -> None:
        for n, expected in ((8, 132), (13, 17424), (14, 34848)):
            with self.subTest(n=n):
                assert glue_lower_bound(132, 8, 1, 3, n) == expected

        bound = glue_bound(132, 8, 1, 3, 14)

        assert bound.integral
        assert (bound.copies, bound.remainder) == (2, 1)
        assert bound.to_dict() == {"n": 14, "bound": 34848, "copies": 2, "remainder": 1, "integral": True}

    def test_closed_form(self) -> None:
        for n in range(3, 51):
            with self.subTest(n=n):
                assert glue_lower_bound(132, 8, 1, 3, n) == 2 ** ((n - 3) % 5) * 132 ** ((n - 3) // 5)

    def test_non_integral(self) -> None:
        bound = glue_bound(10, 5, 3, 3, 7)

        assert not bound.integral
        assert bound.value == 33

    def test_invalid(self) -> None:
        with self.subTest("nH not below nG"):
            with self.assertRaisesRegex(InvalidArgumentException, "Vertex counts must satisfy 0 < nH < nG"):
                glue_bound(132, 3, 1, 3, 10)

        with self.subTest("non positive count"):
            with self.assertRaisesRegex(InvalidArgumentException, "Counts must be positive"):
                glue_bound(0, 8, 1, 3, 10)

        with self.subTest("n below nH"):
            with self.assertRaisesRegex(InvalidArgumentException, "n must be at least nH=3, given: 2"):
                glue_bound(132, 8, 1, 3, 2)

        with self.subTest("not an int"):
            with self.assertRaisesRegex(InvalidArgumentException, "rG must be of type int"):
                glue_bound(132.0, 8, 1, 3, 10)  # type:ignore


@pytest.mark.unit
class TestAsymptoticBase(TestCase):
    def test_bases(self) -> None:
        for arguments, expected in (((132, 8, 1, 3), 2.6553), ((48, 7, 1, 3), 2.6321), ((16, 6, 1, 3), 2.51984)):
            with self.subTest(arguments=arguments):
                assert asymptotic_base(*arguments) == pytest.approx(expected, abs=1e-4)

    def test_nth_root_converges(self) -> None:
        base = asymptotic_base(132, 8, 1, 3)

        # the remainder factor still weighs at n=200
        assert abs(nth_root(glue_lower_bound(132, 8, 1, 3, 200), 200) - base) > 1e-2
        assert abs(nth_root(glue_lower_bound(132, 8, 1, 3, 2000), 2000) - base) <= 1e-2

    def test_nth_root_invalid(self) -> None:
        with self.assertRaisesRegex(InvalidArgumentException, "nth_root needs positive arguments"):
            nth_root(0, 5)
