# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import sys

from handlers.cli import cli_handler


def main() -> int:
    """
    Command line entrypoint
    This is just a wrapper to handlers.cli.cli_handler
    """
    return cli_handler(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
