# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import json
from typing import Any

from share import shared_logger

from .exporter import CommonExporter, Provenance, open_output


class JsonExporter(CommonExporter):
    """
    JSON Exporter.
    Records are merged into one document next to a `provenance` key
    """

    def __init__(self, path: str, provenance: Provenance):
        self._path = path
        self._provenance = provenance
        self._document: dict[str, Any] = {}

    def export(self, record: dict[str, Any]) -> None:
        self._document.update(record)

    def flush(self) -> None:
        document = {**self._document, "provenance": self._provenance.to_dict()}
        with open_output(self._path) as stream:
            stream.write(json.dumps(document, indent=2, default=str) + "\n")

        shared_logger.info("json exported", extra={"path": self._path or "-", "keys": sorted(self._document)})
        self._document = {}
