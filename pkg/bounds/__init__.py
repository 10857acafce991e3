# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .gluing import GlueBound, asymptotic_base, glue_bound, glue_lower_bound, nth_root
from .records import (
    PROVENANCE_DOUBLING,
    PROVENANCE_PUBLISHED,
    PROVENANCE_SOLVED,
    CountRecord,
    classification_table,
    graph_label,
    propagate_h1_doubling,
    published_records,
)
