"""Exact k-path vertex cover numbers and path-sequence censuses for small graphs."""

from .graph import (
    CanonicalForm,
    Graph,
    canonical_form,
    decode_graph6,
    delete_edge,
    delete_vertices,
    encode_graph6,
    enumerate_connected,
    from_edge_list,
    is_connected,
    is_tree,
)
from .solver import (
    CapExceededError,
    has_hamilton_path,
    longest_path_table,
    minimum_k_pvcs,
    path_sequence,
    path_witness_table,
    psi_k,
)
from .oracle import brute_force_psi_k
from .census import (
    CensusRecord,
    CensusReport,
    emit_table,
    find_realisations,
    run_census,
    sequence_feasibility,
    verify_bounds,
    verify_conjecture,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CapExceededError",
    "CensusRecord",
    "CensusReport",
    "Graph",
    "brute_force_psi_k",
    "canonical_form",
    "decode_graph6",
    "delete_edge",
    "delete_vertices",
    "emit_table",
    "encode_graph6",
    "enumerate_connected",
    "find_realisations",
    "from_edge_list",
    "has_hamilton_path",
    "is_connected",
    "is_tree",
    "longest_path_table",
    "minimum_k_pvcs",
    "path_sequence",
    "path_witness_table",
    "psi_k",
    "run_census",
    "sequence_feasibility",
    "verify_bounds",
    "verify_conjecture",
]
