# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .config import Budget, RunConfig, Tolerances, parse_config
from .exceptions import (
    BudgetExhaustedException,
    ConfigFileException,
    DegenerateException,
    InconsistencyException,
    InfeasibleException,
    InvalidArgumentException,
    NotEmbeddableException,
    NotFoundException,
    OutOfRangeException,
    SolverException,
    UnsupportedException,
)
from .expanders import env_expander
from .logger import logger as shared_logger
from .version import version
