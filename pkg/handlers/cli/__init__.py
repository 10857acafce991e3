# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .handler import build_parser, cli_handler, config_from_args, run_command
from .utils import EXIT_BUDGET_EXHAUSTED, EXIT_INVALID_INPUT, EXIT_SOLVER_FAILURE, EXIT_SUCCESS
