# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.


class InvalidArgumentException(ValueError):
    """Raised when an operation receives arguments violating its preconditions"""

    pass


class InfeasibleException(Exception):
    """Raised when edge lengths cannot be realized (e.g. violated triangle inequality)"""

    pass


class DegenerateException(Exception):
    """Raised when a geometric construction degenerates (e.g. zero altitude)"""

    pass


class NotFoundException(Exception):
    """Raised when a search over finitely many candidates is exhausted"""

    pass


class UnsupportedException(Exception):
    """Raised when an input lies outside the supported range of an operation"""

    pass


class SolverException(Exception):
    """Raised when homotopy path tracking persistently fails"""

    pass


class NotEmbeddableException(Exception):
    """Raised when a distance matrix has no realization in R^3"""

    pass


class InconsistencyException(Exception):
    """Raised when counts derived along different routes disagree"""

    pass


class OutOfRangeException(Exception):
    """Raised when a sampling parameter maps outside the valid length range"""

    pass


class BudgetExhaustedException(Exception):
    """Raised when a search stops because its budget ran out"""

    pass


class ConfigFileException(Exception):
    """Raised when there is an error related to the config file"""

    pass
