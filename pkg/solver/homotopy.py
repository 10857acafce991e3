# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from abc import ABCMeta, abstractmethod
from typing import Any, Optional, TypeVar

import numpy as np

from share import InvalidArgumentException
from systems import PolynomialSystem


class CommonHomotopy(metaclass=ABCMeta):
    """
    Abstract class for Homotopy components.
    Rows of x are points, tau holds one time in [0, 1] per row; tau = 1 is the target system
    """

    @abstractmethod
    def __init__(self, **kwargs: Any):
        raise NotImplementedError

    @property
    @abstractmethod
    def n_variables(self) -> int:
        """
        Interface for the number of unknowns of the homotopy
        """

        raise NotImplementedError

    @abstractmethod
    def evaluate(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        """
        Interface for evaluating H(x, tau), B x n
        """

        raise NotImplementedError

    @abstractmethod
    def jacobian(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        """
        Interface for the Jacobian of H in x, B x n x n
        """

        raise NotImplementedError

    @abstractmethod
    def derivative(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        """
        Interface for the derivative of H in tau, B x n
        """

        raise NotImplementedError


CommonHomotopyType = TypeVar("CommonHomotopyType", bound=CommonHomotopy)


def random_gamma(rng: np.random.Generator) -> complex:
    """
    Random point on the unit circle
    """

    return complex(np.exp(2j * np.pi * rng.uniform()))


class TotalDegreeHomotopy(CommonHomotopy):
    """
    H = (1 - tau) * gamma * G + tau * F with start system G_i = x_i^d_i - 1
    """

    def __init__(self, system: PolynomialSystem, gamma: complex):
        self._system = system
        self._compiled = system.compiled()
        self._parameters = system.parameter_values[None, :]
        self.gamma = gamma

        self.degrees = np.array(system.degrees(), dtype=int)
        if np.any(self.degrees < 1):
            raise InvalidArgumentException("Total degree homotopy needs polynomials of positive degree")

    @property
    def n_variables(self) -> int:
        return self._system.n_variables

    @property
    def n_paths(self) -> int:
        return int(np.prod(self.degrees, dtype=object))

    def start_solutions(self, indices: np.ndarray) -> np.ndarray:
        """
        Start points of the given path indices: roots of unity picked by the mixed radix digits of each index
        """

        strides = np.cumprod(np.concatenate([[1], self.degrees[:-1]]))
        digits = (indices[:, None] // strides[None, :]) % self.degrees[None, :]

        return np.exp(2j * np.pi * digits / self.degrees[None, :])

    def _start(self, x: np.ndarray) -> np.ndarray:
        return x ** self.degrees[None, :] - 1.0

    def _target(self, x: np.ndarray) -> np.ndarray:
        return self._compiled.evaluate(x, self._parameters)

    def evaluate(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        weight = tau[:, None]
        return (1.0 - weight) * self.gamma * self._start(x) + weight * self._target(x)

    def jacobian(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        diagonal = self.degrees[None, :] * x ** (self.degrees[None, :] - 1)
        start = np.einsum("bi,ij->bij", diagonal, np.eye(self.n_variables))
        weight = tau[:, None, None]

        return (1.0 - weight) * self.gamma * start + weight * self._compiled.jacobian(x, self._parameters)

    def derivative(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        return self._target(x) - self.gamma * self._start(x)


class ParameterHomotopy(CommonHomotopy):
    """
    Moves the parameters of one family along q(tau) = (1 - tau) q0 + tau q1 + gamma tau (1 - tau) delta.
    The complex detour keeps real start and target parameters off the real discriminant
    """

    def __init__(
        self,
        system_from: PolynomialSystem,
        system_to: PolynomialSystem,
        gamma: complex,
        rng: Optional[np.random.Generator] = None,
    ):
        if not system_from.same_family(system_to):
            raise InvalidArgumentException("Parameter homotopy needs two systems of the same family")

        rng = rng if rng is not None else np.random.default_rng(0)
        self._compiled = system_to.compiled()
        self._n_variables = system_to.n_variables
        self.gamma = gamma
        self.start = system_from.parameter_values
        self.target = system_to.parameter_values

        directions = np.exp(2j * np.pi * rng.uniform(size=len(self.start)))
        self.delta = directions * np.abs(self.target - self.start)

    @property
    def n_variables(self) -> int:
        return self._n_variables

    def parameters_at(self, tau: np.ndarray) -> np.ndarray:
        weight = tau[:, None]
        return (
            (1.0 - weight) * self.start[None, :]
            + weight * self.target[None, :]
            + self.gamma * weight * (1.0 - weight) * self.delta[None, :]
        )

    def _velocity(self, tau: np.ndarray) -> np.ndarray:
        weight = tau[:, None]
        return (self.target - self.start)[None, :] + self.gamma * (1.0 - 2.0 * weight) * self.delta[None, :]

    def evaluate(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        return self._compiled.evaluate(x, self.parameters_at(tau))

    def jacobian(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        return self._compiled.jacobian(x, self.parameters_at(tau))

    def derivative(self, x: np.ndarray, tau: np.ndarray) -> np.ndarray:
        sensitivity = self._compiled.parameter_jacobian(x, self.parameters_at(tau))
        return np.einsum("bml,bl->bm", sensitivity, self._velocity(tau))
