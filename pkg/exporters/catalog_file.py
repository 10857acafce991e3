# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Iterable

from graphs import Graph, format_catalog
from share import InvalidArgumentException, shared_logger

from .exporter import CommonExporter, Provenance, open_output


class CatalogExporter(CommonExporter):
    """
    Catalog Exporter.
    Writes `label<TAB>i-j,...` records, gzipped when the path ends with .gz
    """

    def __init__(self, path: str, provenance: Provenance):
        self._path = path
        self._provenance = provenance
        self._graphs: list[Graph] = []

    def export(self, record: dict[str, Any]) -> None:
        if not isinstance(record.get("graph"), Graph):
            raise InvalidArgumentException("Catalog records must provide a `graph`")

        self._graphs.append(record["graph"])

    def flush(self) -> None:
        with open_output(self._path) as stream:
            for line in self._provenance.header_lines():
                stream.write(line + "\n")

            stream.write(format_catalog(self._graphs))

        shared_logger.info("catalog exported", extra={"path": self._path or "-", "graphs": len(self._graphs)})
        self._graphs = []


def write_catalog(path: str, graphs: Iterable[Graph], provenance: Provenance) -> None:
    exporter = CatalogExporter(path, provenance)
    for graph in graphs:
        exporter.export({"graph": graph})

    exporter.flush()
