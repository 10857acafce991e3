# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import gzip
import sys
from abc import ABCMeta, abstractmethod
from contextlib import contextmanager
from typing import IO, Any, Iterator, Mapping, Optional, TypeVar

from share import version


class Provenance:
    """
    Seed and config hash every output artifact carries
    """

    def __init__(self, seed: int, config_hash: str, extra: Optional[Mapping[str, Any]] = None):
        self.seed = seed
        self.config_hash = config_hash
        self.extra: dict[str, Any] = dict(extra or {})

    def header_lines(self) -> list[str]:
        lines = [f"# version={version}, seed={self.seed}, config={self.config_hash}"]
        if self.extra:
            lines.append("# " + ", ".join(f"{key}={value}" for key, value in self.extra.items()))

        return lines

    def to_dict(self) -> dict[str, Any]:
        return {"version": version, "seed": self.seed, "config": self.config_hash, **self.extra}


@contextmanager
def open_output(path: str) -> Iterator[IO[str]]:
    """
    Text stream for path: stdout when empty or "-", gzip when the name ends with .gz
    """

    if not path or path == "-":
        yield sys.stdout
        return

    stream: IO[str]
    if path.endswith(".gz"):
        stream = gzip.open(path, "wt", encoding="utf-8", newline="")
    else:
        stream = open(path, "w", encoding="utf-8", newline="")

    try:
        yield stream
    finally:
        stream.close()


class CommonExporter(metaclass=ABCMeta):
    """
    Abstract class for Exporter components
    """

    @abstractmethod
    def __init__(self, **kwargs: Any):
        raise NotImplementedError

    @abstractmethod
    def export(self, record: dict[str, Any]) -> None:
        """
        Interface for adding a record to the exporter
        """

        raise NotImplementedError

    @abstractmethod
    def flush(self) -> None:
        """
        Interface for writing the collected records
        """

        raise NotImplementedError


CommonExporterType = TypeVar("CommonExporterType", bound=CommonExporter)
