# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .clustering import NOISE, CountCallable, cluster_candidates
from .curve import CouplerCurve, SweepSpec, trace_coupler_curve
from .family import CouplerFamily, coupler_family
from .sampling import GridSpec, SamplerState, SampleRecord, audit_records, sample_grid
from .search import (
    STRATEGY_LINEAR,
    STRATEGY_STOCHASTIC,
    STRATEGY_TREE,
    CheckpointCallable,
    SearchNode,
    SearchResult,
    SearchState,
    linear_search,
    stochastic_perturbation,
    tree_search,
)
