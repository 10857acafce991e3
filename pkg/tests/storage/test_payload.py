# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import base64
import gzip
from unittest import TestCase

import pytest

from storage import CHUNK_SIZE, PayloadStorage

_content: str = '{"vertices": 4, "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}'


@pytest.mark.unit
class TestPayloadStorage(TestCase):
    def test_get_as_string(self) -> None:
        with self.subTest("plain"):
            assert PayloadStorage(payload=_content).get_as_string() == _content

        with self.subTest("base64 gzip"):
            payload = base64.b64encode(gzip.compress(_content.encode("utf-8"))).decode("utf-8")

            assert PayloadStorage(payload=payload).get_as_string() == _content

        with self.subTest("valid base64 without gzip stays plain"):
            assert PayloadStorage(payload="abcd").get_as_string() == "abcd"

    def test_get_by_lines(self) -> None:
        with self.subTest("newline and carriage return"):
            lines = list(PayloadStorage(payload="a\nbb\r\nccc").get_by_lines())

            assert lines == [(b"a", 2), (b"bb", 6), (b"ccc", 9)]

        with self.subTest("line across chunks"):
            long_line = "x" * (CHUNK_SIZE + 476)
            lines = list(PayloadStorage(payload=long_line + "\n" + "y" * 10).get_by_lines())

            assert lines == [(long_line.encode("utf-8"), CHUNK_SIZE + 477), (b"y" * 10, CHUNK_SIZE + 487)]

        with self.subTest("gzip lines"):
            payload = base64.b64encode(gzip.compress(b"first\nsecond\n")).decode("utf-8")

            assert [line for line, _ in PayloadStorage(payload=payload).get_by_lines()] == [b"first", b"second"]

        with self.subTest("describe"):
            assert PayloadStorage(payload="a").describe() == "payload"
