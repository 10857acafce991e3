# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Any, Callable

from .catalog_file import CatalogExporter
from .csv_file import CsvExporter
from .exporter import CommonExporter
from .json_file import JsonExporter

_init_definition_by_format: dict[str, dict[str, Any]] = {
    "csv": {"class": CsvExporter, "kwargs": ["path", "columns", "provenance"]},
    "json": {"class": JsonExporter, "kwargs": ["path", "provenance"]},
    "catalog": {"class": CatalogExporter, "kwargs": ["path", "provenance"]},
}


class ExporterFactory:
    """
    Exporter factory.
    Provides static methods to instantiate an exporter
    """

    @staticmethod
    def create(output_format: str, **kwargs: Any) -> CommonExporter:
        """
        Instantiates a concrete Exporter given an output format and the exporter init kwargs
        """

        if output_format not in _init_definition_by_format:
            raise ValueError(
                f"You must provide one of the following formats: {', '.join(_init_definition_by_format.keys())}"
            )

        format_definition = _init_definition_by_format[output_format]
        format_kwargs: list[str] = format_definition["kwargs"]
        unknown = [key for key in kwargs.keys() if key not in format_kwargs]
        if unknown:
            raise ValueError(
                f"You can only provide the following init kwargs for {output_format}: {', '.join(format_kwargs)}"
            )

        exporter_builder: Callable[..., CommonExporter] = format_definition["class"]

        return exporter_builder(**kwargs)
