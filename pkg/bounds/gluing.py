# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import math
from fractions import Fraction
from typing import Any

from share import InvalidArgumentException, shared_logger


class GlueBound:
    """
    Lower bound on r3(n) from gluing copies of G along a common subgraph H
    """

    def __init__(self, exact: Fraction, n: int, copies: int, remainder: int):
        self.exact = exact
        self.n = n
        self.copies = copies
        self.remainder = remainder

    @property
    def integral(self) -> bool:
        return self.exact.denominator == 1

    @property
    def value(self) -> int:
        return math.floor(self.exact)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "bound": self.value,
            "copies": self.copies,
            "remainder": self.remainder,
            "integral": self.integral,
        }


def _check_arguments(r_g: int, n_g: int, r_h: int, n_h: int) -> None:
    for name, value in (("rG", r_g), ("nG", n_g), ("rH", r_h), ("nH", n_h)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidArgumentException(f"{name} must be of type int")

    if r_h < 1 or r_g < 1:
        raise InvalidArgumentException(f"Counts must be positive, given: rG={r_g}, rH={r_h}")

    if n_h < 1 or n_h >= n_g:
        raise InvalidArgumentException(f"Vertex counts must satisfy 0 < nH < nG, given: nG={n_g}, nH={n_h}")


def glue_bound(r_g: int, n_g: int, r_h: int, n_h: int, n: int) -> GlueBound:
    """
    2^((n - nH) mod (nG - nH)) * rH * (rG / rH)^floor((n - nH) / (nG - nH)), in exact rationals
    """

    _check_arguments(r_g, n_g, r_h, n_h)
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidArgumentException("n must be of type int")

    if n < n_h:
        raise InvalidArgumentException(f"n must be at least nH={n_h}, given: {n}")

    copies, remainder = divmod(n - n_h, n_g - n_h)
    exact = 2**remainder * r_h * Fraction(r_g, r_h) ** copies
    bound = GlueBound(exact, n, copies, remainder)

    if not bound.integral:
        shared_logger.warning("non integer glue bound", extra={"rG": r_g, "rH": r_h, "n": n, "bound": bound.value})

    return bound


def glue_lower_bound(r_g: int, n_g: int, r_h: int, n_h: int, n: int) -> int:
    return glue_bound(r_g, n_g, r_h, n_h, n).value


def asymptotic_base(r_g: int, n_g: int, r_h: int, n_h: int) -> float:
    """
    (rG / rH)^(1 / (nG - nH)), the growth rate of the glue bound
    """

    _check_arguments(r_g, n_g, r_h, n_h)
    return float((r_g / r_h) ** (1.0 / (n_g - n_h)))


def nth_root(bound: int, n: int) -> float:
    """
    bound^(1/n) for bounds too large for a float
    """

    if bound < 1 or n < 1:
        raise InvalidArgumentException(f"nth_root needs positive arguments, given: {bound}, {n}")

    return math.exp(math.log(bound) / n)
