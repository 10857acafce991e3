# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import os
from typing import Callable

import elasticapm
from elasticapm import Client, get_client

from share import (
    BudgetExhaustedException,
    ConfigFileException,
    InfeasibleException,
    InvalidArgumentException,
    NotEmbeddableException,
    NotFoundException,
    RunConfig,
    SolverException,
    UnsupportedException,
    shared_logger,
)

EXIT_SUCCESS: int = 0
EXIT_INVALID_INPUT: int = 2
EXIT_BUDGET_EXHAUSTED: int = 3
EXIT_SOLVER_FAILURE: int = 4

CommandCallable = Callable[[RunConfig], int]

_invalid_input_exceptions: tuple[type[Exception], ...] = (
    InfeasibleException,
    InvalidArgumentException,
    NotEmbeddableException,
    ConfigFileException,
    UnsupportedException,
    NotFoundException,
    ValueError,
)


def capture_transaction(func: CommandCallable) -> CommandCallable:
    """
    Decorator with logic regarding when to run the command inside an APM transaction:
    only if env variable ELASTIC_APM_ACTIVE is set, so the CLI runs anywhere without an APM server
    """

    if "ELASTIC_APM_ACTIVE" not in os.environ:
        return func

    def wrapper(config: RunConfig) -> int:
        apm_client: Client = get_client() or Client(service_name="real-embeddings")
        apm_client.begin_transaction("cli")
        outcome = "failure"
        try:
            result = func(config)
            outcome = "success" if result == EXIT_SUCCESS else "failure"
            return result
        finally:
            elasticapm.set_transaction_outcome(outcome)
            apm_client.end_transaction(config.command, outcome)

    return wrapper


def _capture_exception() -> None:
    apm_client: Client = get_client()
    if apm_client:
        apm_client.capture_exception()


def wrap_try_except(func: CommandCallable) -> CommandCallable:
    """
    Decorator mapping exceptions to exit codes: invalid or infeasible input exits with 2,
    an exhausted budget with 3 and a solver failure with 4. Anything else is logged and raised
    """

    def wrapper(config: RunConfig) -> int:
        try:
            return func(config)

        except _invalid_input_exceptions as e:
            _capture_exception()
            shared_logger.error("invalid input", extra={"command": config.command, "error": str(e)})

            return EXIT_INVALID_INPUT

        except BudgetExhaustedException as e:
            shared_logger.warning("budget exhausted", extra={"command": config.command, "error": str(e)})

            return EXIT_BUDGET_EXHAUSTED

        except SolverException as e:
            _capture_exception()
            shared_logger.error("solver failure", extra={"command": config.command, "error": str(e)})

            return EXIT_SOLVER_FAILURE

        except Exception as e:
            _capture_exception()
            shared_logger.exception("exception raised", exc_info=e)

            raise e

    return wrapper
