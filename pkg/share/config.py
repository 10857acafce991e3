# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import hashlib
import json
import os
from typing import Any, Callable, Optional

import yaml

from .logger import logger as shared_logger

_available_commands: list[str] = ["generate", "count", "maximize", "curve", "bound"]
_available_formulations: list[str] = ["sphere", "cm"]
_available_strategies: list[str] = ["tree", "linear", "stochastic"]


class Tolerances:
    """
    Numerical tolerances shared by the solver, the systems and the rank tests
    """

    def __init__(
        self,
        min_step: float = 1e-14,
        divergence: float = 1e8,
        endgame_start: float = 0.99,
        endgame_norm: float = 1e4,
        residual: float = 1e-12,
        real: float = 1e-6,
        near_real: float = 1e-4,
        dedupe: float = 1e-8,
        inequality: float = 1e-9,
        rank: float = 1e-8,
        jacobian: float = 1e-8,
        max_newton_iterations: int = 50,
        failure_rate: float = 0.01,
    ):
        self.min_step = min_step
        self.divergence = divergence
        self.endgame_start = endgame_start
        self.endgame_norm = endgame_norm
        self.residual = residual
        self.real = real
        self.near_real = near_real
        self.dedupe = dedupe
        self.inequality = inequality
        self.rank = rank
        self.jacobian = jacobian
        self.max_newton_iterations = max_newton_iterations
        self.failure_rate = failure_rate

        if self.near_real <= self.real:
            raise ValueError("Tolerances near_real must be greater than real")

        if self.endgame_start >= 1.0:
            raise ValueError("Tolerances endgame_start must be below 1")

        if self.endgame_norm >= self.divergence:
            raise ValueError("Tolerances endgame_norm must be below divergence")

    @staticmethod
    def _positive_float(name: str, value: Any) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"Tolerances {name} must be of type float")

        if value <= 0:
            raise ValueError(f"Tolerances {name} must be positive")

        return float(value)

    @property
    def min_step(self) -> float:
        return self._min_step

    @min_step.setter
    def min_step(self, value: float) -> None:
        self._min_step = self._positive_float("min_step", value)

    @property
    def divergence(self) -> float:
        return self._divergence

    @divergence.setter
    def divergence(self, value: float) -> None:
        self._divergence = self._positive_float("divergence", value)

    @property
    def endgame_start(self) -> float:
        return self._endgame_start

    @endgame_start.setter
    def endgame_start(self, value: float) -> None:
        self._endgame_start = self._positive_float("endgame_start", value)

    @property
    def endgame_norm(self) -> float:
        return self._endgame_norm

    @endgame_norm.setter
    def endgame_norm(self, value: float) -> None:
        self._endgame_norm = self._positive_float("endgame_norm", value)

    @property
    def residual(self) -> float:
        return self._residual

    @residual.setter
    def residual(self, value: float) -> None:
        self._residual = self._positive_float("residual", value)

    @property
    def real(self) -> float:
        return self._real

    @real.setter
    def real(self, value: float) -> None:
        self._real = self._positive_float("real", value)

    @property
    def near_real(self) -> float:
        return self._near_real

    @near_real.setter
    def near_real(self, value: float) -> None:
        self._near_real = self._positive_float("near_real", value)

    @property
    def dedupe(self) -> float:
        return self._dedupe

    @dedupe.setter
    def dedupe(self, value: float) -> None:
        self._dedupe = self._positive_float("dedupe", value)

    @property
    def inequality(self) -> float:
        return self._inequality

    @inequality.setter
    def inequality(self, value: float) -> None:
        self._inequality = self._positive_float("inequality", value)

    @property
    def rank(self) -> float:
        return self._rank

    @rank.setter
    def rank(self, value: float) -> None:
        self._rank = self._positive_float("rank", value)

    @property
    def jacobian(self) -> float:
        return self._jacobian

    @jacobian.setter
    def jacobian(self, value: float) -> None:
        self._jacobian = self._positive_float("jacobian", value)

    @property
    def max_newton_iterations(self) -> int:
        return self._max_newton_iterations

    @max_newton_iterations.setter
    def max_newton_iterations(self, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError("Tolerances max_newton_iterations must be of type int")

        if value < 1:
            raise ValueError("Tolerances max_newton_iterations must be positive")

        self._max_newton_iterations = value

    @property
    def failure_rate(self) -> float:
        return self._failure_rate

    @failure_rate.setter
    def failure_rate(self, value: float) -> None:
        self._failure_rate = self._positive_float("failure_rate", value)

    def to_dict(self) -> dict[str, Any]:
        return {
            "min_step": self.min_step,
            "divergence": self.divergence,
            "endgame_start": self.endgame_start,
            "endgame_norm": self.endgame_norm,
            "residual": self.residual,
            "real": self.real,
            "near_real": self.near_real,
            "dedupe": self.dedupe,
            "inequality": self.inequality,
            "rank": self.rank,
            "jacobian": self.jacobian,
            "max_newton_iterations": self.max_newton_iterations,
            "failure_rate": self.failure_rate,
        }


class Budget:
    """
    Budget caps for the searches
    """

    def __init__(
        self,
        seconds: float = 4 * 3600.0,
        nodes: int = 1000,
        solver_calls: int = 500,
        depth: int = 6,
    ):
        self.seconds = seconds
        self.nodes = nodes
        self.solver_calls = solver_calls
        self.depth = depth

    @staticmethod
    def _non_negative_int(name: str, value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"Budget {name} must be of type int")

        if value < 0:
            raise ValueError(f"Budget {name} must not be negative")

        return value

    @property
    def seconds(self) -> float:
        return self._seconds

    @seconds.setter
    def seconds(self, value: float) -> None:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError("Budget seconds must be of type float")

        if value < 0:
            raise ValueError("Budget seconds must not be negative")

        self._seconds = float(value)

    @property
    def nodes(self) -> int:
        return self._nodes

    @nodes.setter
    def nodes(self, value: int) -> None:
        self._nodes = self._non_negative_int("nodes", value)

    @property
    def solver_calls(self) -> int:
        return self._solver_calls

    @solver_calls.setter
    def solver_calls(self, value: int) -> None:
        self._solver_calls = self._non_negative_int("solver_calls", value)

    @property
    def depth(self) -> int:
        return self._depth

    @depth.setter
    def depth(self, value: int) -> None:
        self._depth = self._non_negative_int("depth", value)

    def to_dict(self) -> dict[str, Any]:
        return {"seconds": self.seconds, "nodes": self.nodes, "solver_calls": self.solver_calls, "depth": self.depth}


class RunConfig:
    """
    RunConfig component
    Everything a CLI command needs to run reproducibly
    """

    def __init__(self, command: str, seed: int = 0, threads: Optional[int] = None):
        self.command = command
        self.seed = seed
        self.threads = threads if threads is not None else (os.cpu_count() or 1)

        self._inputs: dict[str, str] = {}
        self._output: str = ""
        self._options: dict[str, Any] = {}

        self.formulation: str = "sphere"
        self.strategy: str = "tree"
        self.triangle: Optional[tuple[int, int, int]] = None
        self.tolerances: Tolerances = Tolerances()
        self.budget: Budget = Budget()

    @property
    def command(self) -> str:
        return self._command

    @command.setter
    def command(self, value: str) -> None:
        if not isinstance(value, str):
            raise ValueError("RunConfig command must be of type str")

        if value not in _available_commands:
            raise ValueError(f"Command must be one of {','.join(_available_commands)}")

        self._command = value

    @property
    def seed(self) -> int:
        return self._seed

    @seed.setter
    def seed(self, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError("RunConfig seed must be of type int")

        self._seed = value

    @property
    def threads(self) -> int:
        return self._threads

    @threads.setter
    def threads(self, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError("RunConfig threads must be of type int")

        if value < 1:
            raise ValueError("RunConfig threads must be positive")

        self._threads = value

    @property
    def formulation(self) -> str:
        return self._formulation

    @formulation.setter
    def formulation(self, value: str) -> None:
        if value not in _available_formulations:
            raise ValueError(f"Formulation must be one of {','.join(_available_formulations)}")

        self._formulation = value

    @property
    def strategy(self) -> str:
        return self._strategy

    @strategy.setter
    def strategy(self, value: str) -> None:
        if value not in _available_strategies:
            raise ValueError(f"Strategy must be one of {','.join(_available_strategies)}")

        self._strategy = value

    @property
    def triangle(self) -> Optional[tuple[int, int, int]]:
        return self._triangle

    @triangle.setter
    def triangle(self, value: Optional[Any]) -> None:
        if value is None:
            self._triangle = None
            return

        if not isinstance(value, (list, tuple)) or len(value) != 3:
            raise ValueError("RunConfig triangle must be a list of 3 vertices")

        if not all(isinstance(vertex, int) and not isinstance(vertex, bool) for vertex in value):
            raise ValueError(f"Each triangle vertex must be of type int, given: {value}")

        if len(set(value)) != 3:
            raise ValueError(f"Triangle vertices must be distinct, given: {value}")

        self._triangle = (value[0], value[1], value[2])

    def get_input(self, name: str) -> Optional[str]:
        """
        Input path getter.
        Returns the resolved path of a named input if set
        """

        return self._inputs[name] if name in self._inputs else None

    def add_input(self, name: str, path: str) -> None:
        """
        Input path setter.
        Paths are resolved before they are stored
        """

        if not isinstance(path, str) or not path:
            raise ValueError(f"Input {name} must be a non empty str")

        if name in self._inputs:
            raise ValueError(f"Duplicated input {name}")

        self._inputs[name] = os.path.abspath(path)

    @property
    def output(self) -> str:
        return self._output

    @output.setter
    def output(self, value: str) -> None:
        if not isinstance(value, str):
            raise ValueError("RunConfig output must be of type str")

        self._output = os.path.abspath(value) if value and value != "-" else ""

    def get_option(self, name: str, default: Any = None) -> Any:
        return self._options.get(name, default)

    def set_option(self, name: str, value: Any) -> None:
        self._options[name] = value

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "seed": self.seed,
            "threads": self.threads,
            "formulation": self.formulation,
            "strategy": self.strategy,
            "triangle": list(self.triangle) if self.triangle else None,
            "inputs": dict(sorted(self._inputs.items())),
            "output": self.output,
            "options": dict(sorted(self._options.items())),
            "tolerances": self.tolerances.to_dict(),
            "budget": self.budget.to_dict(),
        }

    def config_hash(self) -> str:
        """
        SHA-256 of the canonical json of the resolved config
        Thread count does not change results, so it is left out
        """

        canonical = self.to_dict()
        del canonical["threads"]

        return hashlib.sha256(json.dumps(canonical, sort_keys=True, default=str).encode("utf-8")).hexdigest()


def parse_config(config_yaml: str, expanders: list[Callable[[str], str]] = []) -> RunConfig:
    """
    RunConfig component factory
    Given a config yaml as string it return the RunConfig instance as defined by the yaml
    """

    for expander in expanders:
        config_yaml = expander(config_yaml)

    yaml_config = yaml.safe_load(config_yaml)
    if not isinstance(yaml_config, dict):
        raise ValueError("Config must be a mapping")

    if "command" not in yaml_config or not isinstance(yaml_config["command"], str):
        raise ValueError("Must be provided str command")

    conf: RunConfig = RunConfig(command=yaml_config["command"])

    if "seed" in yaml_config:
        conf.seed = yaml_config["seed"]

    if "threads" in yaml_config:
        conf.threads = yaml_config["threads"]

    if "formulation" in yaml_config:
        conf.formulation = yaml_config["formulation"]

    if "strategy" in yaml_config:
        conf.strategy = yaml_config["strategy"]

    if "triangle" in yaml_config:
        conf.triangle = yaml_config["triangle"]

    if "inputs" in yaml_config:
        if not isinstance(yaml_config["inputs"], dict):
            raise ValueError("Inputs must be a mapping of name to path")

        for name, path in yaml_config["inputs"].items():
            conf.add_input(name, path)

    if "output" in yaml_config:
        conf.output = yaml_config["output"]

    if "tolerances" in yaml_config:
        if not isinstance(yaml_config["tolerances"], dict):
            raise ValueError("Tolerances must be a mapping")

        conf.tolerances = Tolerances(**yaml_config["tolerances"])

    if "budget" in yaml_config:
        if not isinstance(yaml_config["budget"], dict):
            raise ValueError("Budget must be a mapping")

        conf.budget = Budget(**yaml_config["budget"])

    if "options" in yaml_config:
        if not isinstance(yaml_config["options"], dict):
            raise ValueError("Options must be a mapping")

        for name, value in yaml_config["options"].items():
            conf.set_option(name, value)

    shared_logger.debug("config", extra={"command": conf.command, "seed": conf.seed})

    return conf
