# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import csv
from typing import Any, Sequence

from share import InvalidArgumentException, shared_logger

from .exporter import CommonExporter, Provenance, open_output


class CsvExporter(CommonExporter):
    """
    CSV Exporter.
    Rows follow the given columns, after the provenance header lines
    """

    def __init__(self, path: str, columns: Sequence[str], provenance: Provenance):
        if not columns:
            raise InvalidArgumentException("CsvExporter needs at least one column")

        self._path = path
        self._columns: list[str] = list(columns)
        self._provenance = provenance
        self._rows: list[dict[str, Any]] = []

    def export(self, record: dict[str, Any]) -> None:
        missing = [column for column in self._columns if column not in record]
        if missing:
            raise InvalidArgumentException(f"Record misses columns: {', '.join(missing)}")

        self._rows.append({column: record[column] for column in self._columns})

    def flush(self) -> None:
        with open_output(self._path) as stream:
            for line in self._provenance.header_lines():
                stream.write(line + "\n")

            writer = csv.DictWriter(stream, fieldnames=self._columns, lineterminator="\n")
            writer.writeheader()
            writer.writerows(self._rows)

        shared_logger.info("csv exported", extra={"path": self._path or "-", "rows": len(self._rows)})
        self._rows = []
