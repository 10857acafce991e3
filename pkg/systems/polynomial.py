# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Optional, Sequence

import numpy as np
import sympy

from share import InvalidArgumentException

Term = tuple[int, ...]

FORMULATION_SPHERE: str = "sphere"
FORMULATION_CM: str = "cayley-menger"
FORMULATION_GENERIC: str = "generic"


def _exclusive_products(factors: np.ndarray) -> np.ndarray:
    """
    Product over the last axis leaving one factor out, for every position, without divisions
    """

    ones = np.ones(factors.shape[:-1] + (1,), dtype=factors.dtype)
    prefix = np.concatenate([ones, np.cumprod(factors[..., :-1], axis=-1)], axis=-1)
    reversed_factors = factors[..., ::-1]
    suffix = np.concatenate([ones, np.cumprod(reversed_factors[..., :-1], axis=-1)], axis=-1)[..., ::-1]

    return prefix * suffix


class _PowerTable:
    """
    Monomials of a batch over one group of exponents (variables or parameters) and their partial derivatives
    """

    def __init__(self, exponents: np.ndarray):
        self.exponents = exponents
        self.lowered = np.maximum(exponents - 1, 0)
        self.max_degree = int(exponents.max()) if exponents.size else 0
        self.columns = np.arange(exponents.shape[1])[None, :]

    def _powers(self, values: np.ndarray) -> np.ndarray:
        return values[:, :, None] ** np.arange(self.max_degree + 1)[None, None, :]

    def monomials(self, values: np.ndarray) -> np.ndarray:
        if self.exponents.shape[1] == 0:
            return np.ones((values.shape[0], self.exponents.shape[0]), dtype=complex)

        gathered = self._powers(values)[:, self.columns, self.exponents]
        return np.prod(gathered, axis=2)

    def derivatives(self, values: np.ndarray) -> np.ndarray:
        """
        B x T x k array of d(monomial_t)/d(value_k)
        """

        if self.exponents.shape[1] == 0:
            return np.zeros((values.shape[0], self.exponents.shape[0], 0), dtype=complex)

        powers = self._powers(values)
        gathered = powers[:, self.columns, self.exponents]
        lowered = powers[:, self.columns, self.lowered]

        return self.exponents[None, :, :] * lowered * _exclusive_products(gathered)


class CompiledSystem:
    """
    Flattened term arrays of a PolynomialSystem for batched evaluation.
    Rows of x are points, rows of q the parameter values of each point (or a single shared row)
    """

    def __init__(self, system: "PolynomialSystem"):
        exponents: list[Term] = []
        coefficients: list[complex] = []
        owners: list[int] = []
        for index, polynomial in enumerate(system.polynomials):
            for term, coefficient in polynomial.items():
                exponents.append(term)
                coefficients.append(coefficient)
                owners.append(index)

        joint = np.array(exponents, dtype=int).reshape(len(exponents), system.n_variables + system.n_parameters)
        self.n_variables = system.n_variables
        self.n_parameters = system.n_parameters
        self.variable_table = _PowerTable(joint[:, : system.n_variables])
        self.parameter_table = _PowerTable(joint[:, system.n_variables :])
        self.coefficients = np.array(coefficients, dtype=complex)

        self.owner = np.zeros((len(owners), len(system.polynomials)))
        self.owner[np.arange(len(owners)), owners] = 1.0

    def _coefficients(self, q: np.ndarray) -> np.ndarray:
        return self.coefficients[None, :] * self.parameter_table.monomials(q)

    def evaluate(self, x: np.ndarray, q: np.ndarray) -> np.ndarray:
        return (self.variable_table.monomials(x) * self._coefficients(q)) @ self.owner

    def jacobian(self, x: np.ndarray, q: np.ndarray) -> np.ndarray:
        derivatives = self.variable_table.derivatives(x)
        coefficients = np.broadcast_to(self._coefficients(q), derivatives.shape[:2])

        return np.einsum("bt,tm,btj->bmj", coefficients, self.owner, derivatives)

    def parameter_jacobian(self, x: np.ndarray, q: np.ndarray) -> np.ndarray:
        monomials = self.variable_table.monomials(x)
        coefficients = self.coefficients[None, :, None] * self.parameter_table.derivatives(q)
        coefficients = np.broadcast_to(coefficients, monomials.shape + coefficients.shape[2:])

        return np.einsum("bt,tm,btl->bml", monomials, self.owner, coefficients)


class PolynomialSystem:
    """
    Square sparse polynomial system.
    Each polynomial maps joint exponent vectors (variables first, then parameters) to complex coefficients,
    so coefficients are polynomials in the parameters; parameter_values fixes one member of the family
    """

    def __init__(
        self,
        variables: Sequence[str],
        polynomials: Sequence[dict[Term, complex]],
        parameters: Sequence[str] = (),
        parameter_values: Optional[Sequence[complex]] = None,
        formulation: str = FORMULATION_GENERIC,
        metadata: Optional[dict[str, Any]] = None,
    ):
        self._variables: list[str] = list(variables)
        self._parameters: list[str] = list(parameters)
        width = len(self._variables) + len(self._parameters)

        if len(polynomials) != len(self._variables):
            raise InvalidArgumentException(
                f"System must be square, given {len(polynomials)} polynomials in {len(self._variables)} variables"
            )

        cleaned: list[dict[Term, complex]] = []
        for index, polynomial in enumerate(polynomials):
            terms: dict[Term, complex] = {}
            for term, coefficient in polynomial.items():
                if len(term) != width:
                    raise InvalidArgumentException(f"Polynomial {index} has a term of wrong width: {term}")

                value = complex(coefficient)
                if not np.isfinite(value.real) or not np.isfinite(value.imag):
                    raise InvalidArgumentException(f"Polynomial {index} has a non finite coefficient")

                if value != 0:
                    key = tuple(int(exponent) for exponent in term)
                    terms[key] = terms.get(key, 0) + value

            cleaned.append(terms)

        self._polynomials = cleaned

        values = list(parameter_values) if parameter_values is not None else []
        if len(values) != len(self._parameters):
            raise InvalidArgumentException(
                f"System needs {len(self._parameters)} parameter values, given: {len(values)}"
            )

        self._parameter_values = np.array(values, dtype=complex)
        self.formulation = formulation
        self.metadata: dict[str, Any] = dict(metadata or {})
        self._compiled: Optional[CompiledSystem] = None

        for position, name in enumerate(self._variables):
            if not any(term[position] > 0 for polynomial in cleaned for term in polynomial):
                raise InvalidArgumentException(f"Variable {name} does not appear in any polynomial")

    @property
    def variables(self) -> list[str]:
        return list(self._variables)

    @property
    def parameters(self) -> list[str]:
        return list(self._parameters)

    @property
    def parameter_values(self) -> np.ndarray:
        return self._parameter_values.copy()

    @property
    def polynomials(self) -> list[dict[Term, complex]]:
        return self._polynomials

    @property
    def n_variables(self) -> int:
        return len(self._variables)

    @property
    def n_parameters(self) -> int:
        return len(self._parameters)

    def __len__(self) -> int:
        return len(self._polynomials)

    def specialize(self, parameter_values: Sequence[complex]) -> "PolynomialSystem":
        """
        Same family member structure at other parameter values
        """

        specialized = PolynomialSystem(
            self._variables,
            self._polynomials,
            self._parameters,
            parameter_values,
            self.formulation,
            self.metadata,
        )
        specialized._compiled = self._compiled

        return specialized

    def same_family(self, other: "PolynomialSystem") -> bool:
        return (
            self._variables == other._variables
            and self._parameters == other._parameters
            and [set(p) for p in self._polynomials] == [set(p) for p in other._polynomials]
        )

    def evaluated_terms(self, index: int) -> dict[Term, complex]:
        """
        Terms of one polynomial over the variables only, parameters substituted
        """

        collapsed: dict[Term, complex] = {}
        split = self.n_variables
        for term, coefficient in self._polynomials[index].items():
            scale = complex(coefficient)
            for exponent, value in zip(term[split:], self._parameter_values):
                scale *= value**exponent

            key = term[:split]
            collapsed[key] = collapsed.get(key, 0) + scale

        return {key: value for key, value in collapsed.items() if value != 0}

    def degrees(self) -> list[int]:
        return [max((sum(term) for term in self.evaluated_terms(index)), default=0) for index in range(len(self))]

    def coefficient_scale(self) -> float:
        return max(
            (abs(value) for index in range(len(self)) for value in self.evaluated_terms(index).values()), default=1.0
        )

    def compiled(self) -> CompiledSystem:
        if self._compiled is None:
            self._compiled = CompiledSystem(self)

        return self._compiled

    def evaluate(self, x: Sequence[complex]) -> np.ndarray:
        point = np.asarray(x, dtype=complex)[None, :]
        return self.compiled().evaluate(point, self._parameter_values[None, :])[0]

    def jacobian(self, x: Sequence[complex]) -> np.ndarray:
        point = np.asarray(x, dtype=complex)[None, :]
        return self.compiled().jacobian(point, self._parameter_values[None, :])[0]

    def dump(self) -> str:
        """
        One polynomial per line as `coeff * x1^a1*x2^a2 + ...` with parameters substituted
        """

        lines = []
        for index in range(len(self)):
            rendered = []
            for term, coefficient in sorted(self.evaluated_terms(index).items(), reverse=True):
                factors = [
                    name if exponent == 1 else f"{name}^{exponent}"
                    for name, exponent in zip(self._variables, term)
                    if exponent > 0
                ]
                value = f"({coefficient.real:.17g}{coefficient.imag:+.17g}j)"
                rendered.append(f"{value} * {'*'.join(factors)}" if factors else value)

            lines.append(" + ".join(rendered))

        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        return {
            "formulation": self.formulation,
            "variables": self.variables,
            "parameters": self.parameters,
            "parameter_values": [[value.real, value.imag] for value in self._parameter_values],
            "metadata": {key: value for key, value in self.metadata.items() if isinstance(value, (str, int, float))},
        }


def terms_from_expression(
    expression: sympy.Expr, variables: Sequence[sympy.Symbol], parameters: Sequence[sympy.Symbol]
) -> dict[Term, complex]:
    """
    Expands a sympy expression into a joint exponent term map
    """

    polynomial = sympy.Poly(sympy.expand(expression), *variables, *parameters)

    return {tuple(monomial): complex(coefficient) for monomial, coefficient in polynomial.terms()}
