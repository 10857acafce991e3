# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from abc import ABCMeta, abstractmethod
from typing import Any, Callable, Iterator, TypeVar

CHUNK_SIZE: int = 1024
GZIP_MAGIC: bytes = b"\037\213"


class CommonStorage(metaclass=ABCMeta):
    """
    Abstract class for Storage components
    """

    @abstractmethod
    def __init__(self, **kwargs: Any):
        raise NotImplementedError

    @abstractmethod
    def get_by_lines(self) -> Iterator[tuple[bytes, int]]:
        """
        Interface for getting content from storage line by line, with the offset after each line.
        Gzipped content is inflated first.
        """

        raise NotImplementedError

    @abstractmethod
    def get_as_string(self) -> str:
        """
        Interface for getting content from storage as string.
        """

        raise NotImplementedError

    @abstractmethod
    def describe(self) -> str:
        """
        Interface for a short description of the source, used in logs and provenance.
        """

        raise NotImplementedError


CommonStorageType = TypeVar("CommonStorageType", bound=CommonStorage)
ChunksCallable = Callable[[CommonStorageType, bytes], Iterator[bytes]]
LinesCallable = Callable[[CommonStorageType, bytes], Iterator[tuple[bytes, int]]]
