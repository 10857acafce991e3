# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .catalog_file import CatalogExporter, write_catalog
from .composite import CompositeExporter
from .csv_file import CsvExporter
from .exporter import CommonExporter, CommonExporterType, Provenance, open_output
from .factory import ExporterFactory
from .json_file import JsonExporter
