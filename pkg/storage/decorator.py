# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import gzip
from io import BytesIO
from typing import Iterator

from share import shared_logger

from .storage import CHUNK_SIZE, GZIP_MAGIC, ChunksCallable, CommonStorageType, LinesCallable


def by_lines(func: ChunksCallable[CommonStorageType]) -> LinesCallable[CommonStorageType]:
    """
    CommonStorageType decorator for returning content split by lines
    """

    def wrapper(storage: CommonStorageType, content: bytes) -> Iterator[tuple[bytes, int]]:
        offset: int = 0
        unfinished_line: bytes = b""

        for data in func(storage, content):
            unfinished_line += data
            lines = unfinished_line.split(b"\n")
            unfinished_line = lines.pop()

            for line in lines:
                offset += len(line) + 1
                yield line.rstrip(b"\r"), offset

        if len(unfinished_line) > 0:
            offset += len(unfinished_line)
            shared_logger.debug("by_line unfinished_line", extra={"offset": offset})

            yield unfinished_line.rstrip(b"\r"), offset

    return wrapper


def inflate(func: ChunksCallable[CommonStorageType]) -> ChunksCallable[CommonStorageType]:
    """
    CommonStorageType decorator for returning inflated content in case the original is gzipped
    """

    def wrapper(storage: CommonStorageType, content: bytes) -> Iterator[bytes]:
        if not content.startswith(GZIP_MAGIC):
            yield from func(storage, content)
            return

        shared_logger.debug("inflate", extra={"source": storage.describe(), "compressed": len(content)})
        gzip_stream = gzip.GzipFile(fileobj=BytesIO(content))
        while True:
            inflated_chunk: bytes = gzip_stream.read(CHUNK_SIZE)
            if len(inflated_chunk) == 0:
                break

            yield inflated_chunk

    return wrapper
