# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from .cayley_menger import (
    CayleyMengerMatrix,
    InequalityReport,
    build_cm_matrix,
    check_inequalities,
    cm_parameters,
    cm_subsystem,
    evaluate_inequalities,
    find_cm_unknowns,
    governing_subsets,
)
from .factory import SystemFactory
from .lengths import LengthAssignment, generic_lengths
from .polynomial import (
    FORMULATION_CM,
    FORMULATION_GENERIC,
    FORMULATION_SPHERE,
    CompiledSystem,
    PolynomialSystem,
    Term,
    terms_from_expression,
)
from .polytope import NewtonPolytope, mixed_volume, newton_polytopes, volume
from .published import PublishedLengths, published_lengths, published_names, rounding_margin
from .sphere import (
    FixedTriangle,
    build_sphere_system,
    default_triangle,
    fixed_triangle_coordinates,
    sphere_parameters,
    sphere_positions,
)
