# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import os
import re

from .logger import logger as shared_logger

_env_pattern = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")


def env_expander(config_yaml: str) -> str:
    """
    Environment expander for config file
    It scans the file for the ${VAR} pattern and replaces every occurrence with
    the value of the environment variable. Exceptions will be risen for the
    following scenarios:
        - The variable is not set
        - The variable is set to an empty value
    """

    def _replace(match: re.Match[str]) -> str:
        name = match.group(1)
        if name not in os.environ:
            raise ValueError(f"Environment variable not set: {name}")

        value = os.environ[name]
        if value == "":
            raise ValueError(f"Environment variable is empty: {name}")

        shared_logger.debug("expanding env variable", extra={"name": name})
        return value

    return _env_pattern.sub(_replace, config_yaml)
