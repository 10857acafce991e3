# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import gzip
import json
import os
import re
import tempfile
from typing import Any
from unittest import TestCase

import mock
import pytest

from exporters import (
    CatalogExporter,
    CommonExporter,
    CompositeExporter,
    CsvExporter,
    ExporterFactory,
    JsonExporter,
    Provenance,
    write_catalog,
)
from graphs import complete_graph, generate_catalog, parse_catalog
from share import InvalidArgumentException, version


class DummyExporter(CommonExporter):
    def __init__(self, **kwargs: Any):
        self._exported: list[dict[str, Any]] = []
        self._flushed = False

    def export(self, record: dict[str, Any]) -> None:
        self._exported.append(record)

    def flush(self) -> None:
        self._flushed = True


class _OutputDirectory(TestCase):
    def setUp(self) -> None:
        self._directory = tempfile.TemporaryDirectory()
        self._provenance = Provenance(7, "abc123", {"graph": "G48"})

    def tearDown(self) -> None:
        self._directory.cleanup()

    def _path(self, name: str) -> str:
        return os.path.join(self._directory.name, name)


@pytest.mark.unit
class TestProvenance(TestCase):
    def test_header_lines(self) -> None:
        assert Provenance(1, "ff").header_lines() == [f"# version={version}, seed=1, config=ff"]
        assert Provenance(1, "ff", {"n": 6}).header_lines()[1] == "# n=6"
        assert Provenance(1, "ff", {"n": 6}).to_dict() == {"version": version, "seed": 1, "config": "ff", "n": 6}


@pytest.mark.unit
class TestCsvExporter(_OutputDirectory):
    def test_flush(self) -> None:
        path = self._path("count.csv")
        exporter = CsvExporter(path, ["graph_id", "realCount"], self._provenance)
        exporter.export({"graph_id": "abc", "realCount": 48, "ignored": 1})
        exporter.flush()

        with open(path) as f:
            lines = f.read().splitlines()

        assert lines == [
            f"# version={version}, seed=7, config=abc123",
            "# graph=G48",
            "graph_id,realCount",
            "abc,48",
        ]

    def test_gzip(self) -> None:
        path = self._path("log.csv.gz")
        exporter = CsvExporter(path, ["phi"], Provenance(0, "ff"))
        exporter.export({"phi": 0.5})
        exporter.flush()

        with gzip.open(path, "rt") as f:
            assert f.read().splitlines()[1:] == ["phi", "0.5"]

    def test_invalid(self) -> None:
        with self.subTest("no columns"):
            with self.assertRaisesRegex(InvalidArgumentException, "CsvExporter needs at least one column"):
                CsvExporter(self._path("a.csv"), [], self._provenance)

        with self.subTest("missing column"):
            exporter = CsvExporter(self._path("a.csv"), ["phi", "theta"], self._provenance)

            with self.assertRaisesRegex(InvalidArgumentException, "Record misses columns: theta"):
                exporter.export({"phi": 0.1})


@pytest.mark.unit
class TestJsonExporter(_OutputDirectory):
    def test_flush(self) -> None:
        path = self._path("best.json")
        exporter = JsonExporter(path, self._provenance)
        exporter.export({"real_count": 32})
        exporter.export({"nodes": 4})
        exporter.flush()

        with open(path) as f:
            document = json.load(f)

        assert document == {
            "real_count": 32,
            "nodes": 4,
            "provenance": {"version": version, "seed": 7, "config": "abc123", "graph": "G48"},
        }


@pytest.mark.unit
class TestCatalogExporter(_OutputDirectory):
    def test_write_catalog(self) -> None:
        path = self._path("catalog_6.txt.gz")
        catalog = generate_catalog(6)

        write_catalog(path, catalog, self._provenance)

        with gzip.open(path, "rt") as f:
            content = f.read()

        assert content.startswith("# version=")
        assert parse_catalog(content, 6) == catalog

    def test_invalid_record(self) -> None:
        exporter = CatalogExporter(self._path("catalog.txt"), self._provenance)

        with self.assertRaisesRegex(InvalidArgumentException, "Catalog records must provide a `graph`"):
            exporter.export({"graph": "K4"})

    def test_stdout(self) -> None:
        exporter = CatalogExporter("", self._provenance)
        exporter.export({"graph": complete_graph(4)})

        with mock.patch("sys.stdout") as stdout:
            exporter.flush()

        written = "".join(call.args[0] for call in stdout.write.call_args_list)
        assert written.endswith("1-2,1-3,1-4,2-3,2-4,3-4\n")


@pytest.mark.unit
class TestCompositeExporter(TestCase):
    def test_export_and_flush(self) -> None:
        first = DummyExporter()
        second = DummyExporter()
        composite = CompositeExporter()
        composite.add_exporter(first)
        composite.add_exporter(second)

        composite.export({"realCount": 4})
        composite.flush()

        assert first._exported == second._exported == [{"realCount": 4}]
        assert first._flushed and second._flushed


@pytest.mark.unit
class TestExporterFactory(TestCase):
    def test_create(self) -> None:
        provenance = Provenance(0, "ff")

        with self.subTest("csv"):
            assert isinstance(ExporterFactory.create("csv", path="", columns=["a"], provenance=provenance), CsvExporter)

        with self.subTest("json"):
            assert isinstance(ExporterFactory.create("json", path="", provenance=provenance), JsonExporter)

        with self.subTest("catalog"):
            assert isinstance(ExporterFactory.create("catalog", path="", provenance=provenance), CatalogExporter)

        with self.subTest("invalid format"):
            with self.assertRaisesRegex(
                ValueError, re.escape("You must provide one of the following formats: csv, json, catalog")
            ):
                ExporterFactory.create("yaml", path="")

        with self.subTest("unknown kwargs"):
            with self.assertRaisesRegex(
                ValueError, re.escape("You can only provide the following init kwargs for json: path, provenance")
            ):
                ExporterFactory.create("json", path="", provenance=provenance, columns=["a"])
