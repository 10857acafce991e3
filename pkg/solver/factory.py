# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Callable

from .homotopy import CommonHomotopyType, ParameterHomotopy, TotalDegreeHomotopy

_init_definition_by_kind: dict[str, dict[str, Any]] = {
    "total-degree": {
        "class": TotalDegreeHomotopy,
        "kwargs": ["system", "gamma"],
    },
    "parameter": {
        "class": ParameterHomotopy,
        "kwargs": ["system_from", "system_to", "gamma", "rng"],
    },
}


class HomotopyFactory:
    """
    Homotopy factory.
    Provides static methods to instantiate a homotopy
    """

    @staticmethod
    def create(kind: str, **kwargs: Any) -> CommonHomotopyType:
        """
        Instantiates a concrete Homotopy given a kind and the homotopy init kwargs
        """

        if kind not in _init_definition_by_kind:
            raise ValueError(
                f"You must provide one of the following homotopies: {', '.join(_init_definition_by_kind.keys())}"
            )

        definition = _init_definition_by_kind[kind]
        builder: Callable[..., CommonHomotopyType] = definition["class"]

        init_kwargs: list[str] = [key for key in kwargs.keys() if key in definition["kwargs"]]
        if len(init_kwargs) != len(kwargs):
            raise ValueError(
                f"You can only provide the following init kwargs for {kind}: "
                + f"{', '.join(definition['kwargs'])}. (provided: {', '.join(kwargs.keys())})"
            )

        return builder(**kwargs)
