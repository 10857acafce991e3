# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .factory import StorageFactory
from .file import FileStorage
from .payload import PayloadStorage
from .readers import read_catalog, read_graph, read_json, read_lengths
from .storage import CHUNK_SIZE, GZIP_MAGIC, CommonStorage
