# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import gzip
import os
from typing import Iterator

from share import NotFoundException, shared_logger

from .decorator import by_lines, inflate
from .storage import CHUNK_SIZE, GZIP_MAGIC, CommonStorage


class FileStorage(CommonStorage):
    """
    File Storage.
    This class implements concrete local file Storage.
    The file might be gzip encoded
    """

    def __init__(self, path: str):
        self._path: str = os.path.abspath(path)

    def describe(self) -> str:
        return self._path

    def _read(self) -> bytes:
        if not os.path.isfile(self._path):
            raise NotFoundException(f"File not found: {self._path}")

        with open(self._path, "rb") as f:
            return f.read()

    @by_lines
    @inflate
    def _generate(self, content: bytes) -> Iterator[bytes]:
        """
        Concrete implementation of the iterator for get_by_lines
        """

        for start in range(0, len(content), CHUNK_SIZE):
            yield content[start : start + CHUNK_SIZE]

    def get_by_lines(self) -> Iterator[tuple[bytes, int]]:
        content = self._read()
        shared_logger.debug("get_by_lines", extra={"path": self._path, "size": len(content)})

        yield from self._generate(content)

    def get_as_string(self) -> str:
        content = self._read()
        shared_logger.debug("get_as_string", extra={"path": self._path})

        if content.startswith(GZIP_MAGIC):
            return gzip.decompress(content).decode("utf-8")

        return content.decode("utf-8")
