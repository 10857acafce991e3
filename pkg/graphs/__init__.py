# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .canonical import CanonicalLabel, canonical_form, canonical_form_bruteforce, canonical_graph, decode_label
from .catalog import (
    LAST_STEP_H1,
    LAST_STEP_H2,
    classify_last_step,
    format_catalog,
    generate_catalog,
    parse_catalog,
)
from .graph import Edge, Graph, SamplingSubgraph, complete_graph, edge_key, normalize_edge, parse_edge_key
from .henneberg import henneberg_h1, henneberg_h2, henneberg_h3
from .library import h2_required_7, named_graph, named_graphs
from .rigidity import (
    find_global_extension,
    is_generically_rigid,
    is_globally_rigid,
    numerical_rank,
    random_realization,
    rigidity_matrix,
    stress_matrix,
)
from .subgraphs import spherical_subgraphs, suitable_subgraphs
