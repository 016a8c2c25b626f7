"""Maximum families of pairwise triangle-different Hamiltonian paths."""

__version__ = "0.1.0"

from hampaths.graph_core import (  # noqa: E402
    Bipartition,
    EdgeSet,
    HamPath,
    balanced_bipartition_count,
    binomial,
    contains_cycle_of_length,
    contains_hamiltonian_cycle,
    contains_odd_cycle,
    contains_triangle,
    path_bipartition,
    path_edges,
    union,
)
from hampaths.family_builder import build_mh, construct_triangle_family, identity_check, mh_to_h  # noqa: E402
from hampaths.verifier import certify_tightness, end_edge_injectivity, verify_pairwise  # noqa: E402

__all__ = [
    "Bipartition",
    "EdgeSet",
    "HamPath",
    "balanced_bipartition_count",
    "binomial",
    "build_mh",
    "certify_tightness",
    "construct_triangle_family",
    "contains_cycle_of_length",
    "contains_hamiltonian_cycle",
    "contains_odd_cycle",
    "contains_triangle",
    "end_edge_injectivity",
    "identity_check",
    "mh_to_h",
    "path_bipartition",
    "path_edges",
    "union",
    "verify_pairwise",
]
