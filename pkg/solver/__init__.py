# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .embeddings import (
    FORMULATION_CM,
    FORMULATION_SPHERE,
    EmbeddingCount,
    count_embeddings,
    distance_matrix,
    min_mixed_volume_over_triangles,
    realize_from_distances,
    unknown_assignment,
)
from .factory import HomotopyFactory
from .homotopy import CommonHomotopy, CommonHomotopyType, ParameterHomotopy, TotalDegreeHomotopy, random_gamma
from .solution import SOLUTION_FAILED, SOLUTION_REFINED, Solution, SolutionSet, deduplicate
from .solve import (
    GenericStart,
    refine,
    refine_points,
    solve_generic,
    solve_total_degree,
    track_parameter_homotopy,
)
from .tracker import PATH_DIVERGED, PATH_FAILED, PATH_SUCCESS, PathTracker, TrackResult, solve_linear
