# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import gzip
import os
import tempfile
from unittest import TestCase

import pytest

from share import NotFoundException
from storage import FileStorage


@pytest.mark.unit
class TestFileStorage(TestCase):
    def setUp(self) -> None:
        self._directory = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self._directory.cleanup()

    def _write(self, name: str, content: bytes) -> str:
        path = os.path.join(self._directory.name, name)
        with open(path, "wb") as f:
            f.write(content)

        return path

    def test_get_as_string(self) -> None:
        with self.subTest("plain"):
            assert FileStorage(self._write("plain.txt", b"K4\n")).get_as_string() == "K4\n"

        with self.subTest("gzip"):
            assert FileStorage(self._write("catalog.gz", gzip.compress(b"K4\n"))).get_as_string() == "K4\n"

    def test_get_by_lines(self) -> None:
        path = self._write("catalog.gz", gzip.compress(b"first\nsecond\nthird"))

        assert list(FileStorage(path).get_by_lines()) == [(b"first", 6), (b"second", 13), (b"third", 18)]

    def test_missing(self) -> None:
        storage = FileStorage(os.path.join(self._directory.name, "missing.json"))

        with self.assertRaisesRegex(NotFoundException, "File not found: .*missing.json"):
            storage.get_as_string()

        with self.assertRaisesRegex(NotFoundException, "File not found"):
            list(storage.get_by_lines())
