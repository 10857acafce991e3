# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import base64
import binascii
import gzip
from typing import Iterator

from share import shared_logger

from .decorator import by_lines, inflate
from .storage import CHUNK_SIZE, GZIP_MAGIC, CommonStorage


class PayloadStorage(CommonStorage):
    """
    PayloadStorage Storage.
    This class implements concrete Payload Storage for content given inline.
    The payload is plain text, or base64 of gzipped text
    """

    def __init__(self, payload: str):
        self._payload: str = payload

    def describe(self) -> str:
        return "payload"

    def _decode(self) -> bytes:
        try:
            base64_decoded = base64.b64decode(self._payload, validate=True)
        except (binascii.Error, ValueError):
            return self._payload.encode("utf-8")

        if base64_decoded.startswith(GZIP_MAGIC):  # gzip compression method
            return base64_decoded

        return self._payload.encode("utf-8")

    @by_lines
    @inflate
    def _generate(self, content: bytes) -> Iterator[bytes]:
        """
        Concrete implementation of the iterator for get_by_lines
        """

        for start in range(0, len(content), CHUNK_SIZE):
            yield content[start : start + CHUNK_SIZE]

    def get_by_lines(self) -> Iterator[tuple[bytes, int]]:
        yield from self._generate(self._decode())

    def get_as_string(self) -> str:
        shared_logger.debug("get_as_string", extra={"payload": self._payload[0:11]})

        content = self._decode()
        if content.startswith(GZIP_MAGIC):
            return gzip.decompress(content).decode("utf-8")

        return content.decode("utf-8")
