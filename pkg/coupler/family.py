# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import math
from typing import Any, Optional

from graphs import Graph, SamplingSubgraph
from share import DegenerateException, InfeasibleException, OutOfRangeException, UnsupportedException
from systems import LengthAssignment, fixed_triangle_coordinates

_degenerate_relative: float = 1e-12


class CouplerFamily:
    """
    Two-parameter length family of a sampling subgraph (u, v, w, p, c).
    In the frame of the triangle vuw, v sits at the origin, w = (x_w, y_w, 0) and u = (0, t, 0) moves on the y-axis.
    p runs on a circle about the y-axis at height y'_p with radius z_p, so moving u along the axis with
    d'_uv = t, d'_uw = |(x_w, y_w - t, 0)| and d'_up = |(0, y'_p - t, z_p)| keeps the coupler curve of c.
    The second parameter r is the length of uc
    """

    def __init__(self, graph: Graph, lengths: LengthAssignment, subgraph: SamplingSubgraph):
        subgraph.validate(graph)
        self.graph = graph
        self.lengths = lengths.restrict(graph)
        self.subgraph = subgraph

        u, v, w, p, c = subgraph.as_tuple()
        d_uv = self.lengths[(u, v)]
        frame = fixed_triangle_coordinates(d_uv, self.lengths[(v, w)], self.lengths[(u, w)])
        if frame.degenerate:
            raise DegenerateException(f"Triangle {v}-{u}-{w} is degenerate")

        self.x_w: float = frame.x3
        self.y_w: float = frame.y3

        d_vp = self.lengths[(v, p)]
        d_up = self.lengths[(u, p)]
        self.y_p: float = (d_uv**2 + d_vp**2 - d_up**2) / (2 * d_uv)
        altitude = d_vp**2 - self.y_p**2
        if altitude < -_degenerate_relative * d_vp**2:
            raise InfeasibleException(f"Triangle {u}-{v}-{p} violates the triangle inequality")

        if altitude <= _degenerate_relative * d_vp**2:
            raise DegenerateException(f"Vertex {p} has zero altitude in triangle {u}-{v}-{p}")

        self.z_p: float = math.sqrt(altitude)
        self.d_cw: Optional[float] = self.lengths[(c, w)] if subgraph.spherical else None

    @property
    def spherical(self) -> bool:
        return self.subgraph.spherical

    @property
    def base_t(self) -> float:
        u, v, _, _, _ = self.subgraph.as_tuple()
        return self.lengths[(u, v)]

    @property
    def base_r(self) -> float:
        u, _, _, _, c = self.subgraph.as_tuple()
        return self.lengths[(u, c)]

    def lengths_at(self, t: float, r: Optional[float] = None) -> LengthAssignment:
        """
        d'(t) with uc set to r, or kept when r is not given
        """

        if t <= 0:
            raise OutOfRangeException(f"Parameter t must be positive, given: {t}")

        u, v, w, p, c = self.subgraph.as_tuple()
        updates = {
            (u, v): t,
            (u, w): math.hypot(self.x_w, self.y_w - t),
            (u, p): math.hypot(self.y_p - t, self.z_p),
        }
        if r is not None:
            if r <= 0:
                raise OutOfRangeException(f"Parameter r must be positive, given: {r}")

            updates[(u, c)] = r

        return self.lengths.with_values(updates)

    def _require_spherical(self) -> float:
        if self.d_cw is None:
            raise UnsupportedException(f"Subgraph {self.subgraph} is not spherical")

        return self.d_cw

    def t_r_from_phi_theta(self, phi: float, theta: float) -> tuple[float, float]:
        d_cw = self._require_spherical()
        if not -math.pi / 2 < phi < math.pi / 2 or not 0 < theta < math.pi:
            raise OutOfRangeException(f"Angles out of range: phi={phi}, theta={theta}")

        t = self.y_w + self.x_w * math.tan(phi)
        if t <= 0:
            raise OutOfRangeException(f"Angle phi={phi} puts u at t={t}")

        d_uw = self.x_w / math.cos(phi)
        r = math.sqrt(max(d_uw**2 + d_cw**2 - 2 * d_uw * d_cw * math.cos(theta), 0.0))

        return t, r

    def lengths_from_phi_theta(self, phi: float, theta: float) -> tuple[LengthAssignment, float, float]:
        """
        phi is the angle at w between the altitude onto the y-axis and wu, theta the angle between wu and wc
        """

        t, r = self.t_r_from_phi_theta(phi, theta)
        return self.lengths_at(t, r), t, r

    def phi_theta_from_lengths(self, lengths: LengthAssignment) -> tuple[float, float]:
        """
        Angles of lengths belonging to the family
        """

        d_cw = self._require_spherical()
        u, v, _, _, c = self.subgraph.as_tuple()
        t = lengths[(u, v)]
        r = lengths[(u, c)]

        phi = math.atan2(t - self.y_w, self.x_w)
        d_uw = self.x_w / math.cos(phi)
        cosine = (d_uw**2 + d_cw**2 - r**2) / (2 * d_uw * d_cw)
        if abs(cosine) > 1:
            raise OutOfRangeException(f"Length {r} of uc is not reachable on the sphere about {self.subgraph.w}")

        return phi, math.acos(cosine)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subgraph": list(self.subgraph.as_tuple()),
            "x_w": self.x_w,
            "y_w": self.y_w,
            "y_p": self.y_p,
            "z_p": self.z_p,
            "d_cw": self.d_cw,
        }


def coupler_family(graph: Graph, lengths: LengthAssignment, subgraph: SamplingSubgraph) -> CouplerFamily:
    return CouplerFamily(graph, lengths, subgraph)
