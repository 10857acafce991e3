# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import math
from unittest import TestCase

import pytest

from coupler import CouplerFamily, coupler_family
from graphs import SamplingSubgraph, named_graph
from share import DegenerateException, OutOfRangeException
from systems import published_lengths


def _g48_family() -> CouplerFamily:
    graph = named_graph("G48")
    return coupler_family(graph, published_lengths("G48-start").lengths, SamplingSubgraph.parse("2,3,1,7,6", graph))


@pytest.mark.unit
class TestCouplerFamily(TestCase):
    def test_frame(self) -> None:
        family = _g48_family()
        lengths = family.lengths

        assert family.spherical
        assert family.base_t == lengths[(2, 3)]
        assert family.base_r == lengths[(2, 6)]
        assert family.d_cw == lengths[(1, 6)]
        assert math.hypot(family.x_w, family.y_w) == pytest.approx(lengths[(1, 3)])
        assert math.hypot(family.y_p, family.z_p) == pytest.approx(lengths[(3, 7)])
        assert set(family.to_dict().keys()) == {"subgraph", "x_w", "y_w", "y_p", "z_p", "d_cw"}

    def test_base_lengths_reproduced(self) -> None:
        family = _g48_family()
        moved = family.lengths_at(family.base_t)

        for edge in family.lengths.edges:
            with self.subTest(edge=edge):
                assert moved[edge] == pytest.approx(family.lengths[edge])

    def test_only_u_edges_move(self) -> None:
        family = _g48_family()
        moved = family.lengths_at(2.5, 3.0)
        changed = [edge for edge in family.lengths.edges if moved[edge] != pytest.approx(family.lengths[edge])]

        assert changed == [(1, 2), (2, 3), (2, 6), (2, 7)]
        assert moved[(2, 3)] == 2.5
        assert moved[(2, 6)] == 3.0

    def test_angles(self) -> None:
        family = _g48_family()

        with self.subTest("phi and theta recovered from lengths"):
            lengths, t, r = family.lengths_from_phi_theta(0.3, 1.2)
            phi, theta = family.phi_theta_from_lengths(lengths)

            assert t == pytest.approx(family.y_w + family.x_w * math.tan(0.3))
            assert lengths[(2, 6)] == r
            assert (phi, theta) == (pytest.approx(0.3), pytest.approx(1.2))

        with self.subTest("theta zero puts c closest to u"):
            _, r = family.t_r_from_phi_theta(0.0, 1e-9)

            assert r == pytest.approx(abs(family.x_w - family.d_cw), abs=1e-6)

        with self.subTest("phi out of range"):
            with self.assertRaisesRegex(OutOfRangeException, "Angles out of range"):
                family.t_r_from_phi_theta(math.pi / 2, 1.0)

        with self.subTest("u behind v"):
            with self.assertRaisesRegex(OutOfRangeException, "puts u at t="):
                family.t_r_from_phi_theta(-1.5, 1.0)

    def test_out_of_range(self) -> None:
        family = _g48_family()

        with self.subTest("t"):
            with self.assertRaisesRegex(OutOfRangeException, "Parameter t must be positive, given: 0"):
                family.lengths_at(0.0)

        with self.subTest("r"):
            with self.assertRaisesRegex(OutOfRangeException, "Parameter r must be positive, given: -1"):
                family.lengths_at(1.0, -1.0)

    def test_degenerate_triangle(self) -> None:
        graph = named_graph("G48")
        lengths = published_lengths("G48-start").lengths
        # 1-2-3 collinear
        collinear = lengths.with_values({(1, 2): 1.0, (2, 3): 1.0, (1, 3): 2.0})

        with self.assertRaisesRegex(DegenerateException, "Triangle 3-2-1 is degenerate"):
            CouplerFamily(graph, collinear, SamplingSubgraph.parse("2,3,1,7,6", graph))
