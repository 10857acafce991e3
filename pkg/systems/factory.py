# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Callable

import numpy as np

from graphs import Graph

from .cayley_menger import cm_parameters, cm_subsystem
from .lengths import LengthAssignment
from .polynomial import FORMULATION_CM, FORMULATION_SPHERE, PolynomialSystem
from .sphere import build_sphere_system, sphere_parameters

_init_definition_by_formulation: dict[str, dict[str, Any]] = {
    "sphere": {
        "class": build_sphere_system,
        "kwargs": ["triangle"],
        "tag": FORMULATION_SPHERE,
    },
    "cm": {
        "class": cm_subsystem,
        "kwargs": ["unknowns", "seed", "tolerances"],
        "tag": FORMULATION_CM,
    },
}


class SystemFactory:
    """
    System factory.
    Provides static methods to build a polynomial system of a formulation and to move it to other lengths
    """

    @staticmethod
    def create(formulation: str, graph: Graph, lengths: LengthAssignment, **kwargs: Any) -> PolynomialSystem:
        """
        Builds the system of a formulation given the graph, the lengths and the formulation kwargs
        """

        if formulation not in _init_definition_by_formulation:
            raise ValueError(
                "You must provide one of the following formulations: "
                + f"{', '.join(_init_definition_by_formulation.keys())}"
            )

        definition = _init_definition_by_formulation[formulation]
        builder: Callable[..., PolynomialSystem] = definition["class"]

        unknown_kwargs = [key for key in kwargs.keys() if key not in definition["kwargs"]]
        if unknown_kwargs:
            raise ValueError(
                f"You can only provide the following init kwargs for {formulation}: "
                + f"{', '.join(definition['kwargs'])}. (provided: {', '.join(kwargs.keys())})"
            )

        return builder(graph, lengths, **kwargs)

    @staticmethod
    def parameters(system: PolynomialSystem, graph: Graph, lengths: LengthAssignment) -> np.ndarray:
        """
        Parameter vector of the family of system at other lengths of the same graph
        """

        if system.formulation == FORMULATION_SPHERE:
            return sphere_parameters(graph, lengths, system.metadata["triangle"])

        if system.formulation == FORMULATION_CM:
            return cm_parameters(graph, lengths)

        raise ValueError(f"System formulation {system.formulation} has no length parameters")

    @staticmethod
    def retarget(system: PolynomialSystem, graph: Graph, lengths: LengthAssignment) -> PolynomialSystem:
        return system.specialize(SystemFactory.parameters(system, graph, lengths))
