# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any

from .exporter import CommonExporter


class CompositeExporter(CommonExporter):
    """
    Composite Exporter.
    This class implements composite pattern for exporters
    """

    def __init__(self, **kwargs: Any):
        self._exporters: list[CommonExporter] = []

    def add_exporter(self, exporter: CommonExporter) -> None:
        """
        Exporter setter.
        Add an exporter to the composite
        """
        self._exporters.append(exporter)

    def export(self, record: dict[str, Any]) -> None:
        for exporter in self._exporters:
            exporter.export(record)

    def flush(self) -> None:
        for exporter in self._exporters:
            exporter.flush()
