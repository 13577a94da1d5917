"""Exact combinatorics of Lipschitz and Kantorovich-Rubinstein polytopes of
finite metric spaces."""

from .admissible import (
    GenericityReport,
    WitnessFunction,
    edge_set,
    is_admissible,
    is_generic,
    tree_admissible_fast,
    witness_function,
)
from .assignment import min_cost_assignment, min_cost_transportation
from .classify import (
    CombinatorialStructure,
    CycleConfig,
    combinatorial_structure,
    count_classes,
    cycle_functional,
    equivalent,
)
from .faces import (
    Facet,
    build_facet_tree,
    enumerate_facets,
    f_vector,
    face_dimension,
    faces_with_outdegrees,
    min_constellation,
    phi_functional,
)
from .metric import (
    MetricSpace,
    binary_f,
    load_metric,
    random_generic_metric,
    rearrangement_metric,
    sign_family,
    sign_family_metric,
    uniform_metric,
    validate_metric,
)
from .norms import SignedMeasure, kr_norm, kr_norm_dual, lip_norm, measure, vertex_measure
from .triangulate import (
    check_unimodular,
    product_triangulation,
    regularity_certificate,
    triangulate_root_polytope,
)

__version__ = "0.1.0"
