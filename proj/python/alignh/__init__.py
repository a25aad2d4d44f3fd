"""Bijective weighted sentence alignment toolkit.

Gadget reductions from CNF satisfiability and vertex cover, exact and
restricted solvers, witness encodings with their decoders, and the
corruption-recovery experiment loop.  Exact rational weights cross the
boundary as "p/q" strings; alignments as (e_begin, e_end, f_begin, f_end)
span tuples.
"""

from ._alignh import (
    DEFAULT_PARTITION_GUARD,
    GUARD_ENV_VAR,
    BlockPattern,
    CnfFormula,
    Graph,
    InstanceFile,
    SatReductionMap,
    SolveResult,
    Span,
    VcReductionMap,
    WsaInstance,
    alignment_weight,
    amplify_sat_dummy_clauses,
    brute_force_min_cover,
    brute_force_satisfiable,
    brute_force_satisfying,
    check_alignment,
    corrupt,
    decide_weight_one,
    decode_assignment,
    decode_cover,
    edit_distance,
    encode_dual,
    encode_matrix,
    encode_partition,
    evaluate,
    hamming_distance,
    ideal_block_pattern,
    is_vertex_cover,
    majority_decode,
    parse_cnf,
    parse_graph,
    parse_instance,
    run_experiment,
    sat_to_pwsa_unique,
    sat_to_wsa,
    serialize_instance,
    solve_exact,
    solve_monotone_dp,
    solve_pwsa,
    to_cnf,
    to_graph,
    vc_to_wsa,
    witness_from_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PARTITION_GUARD",
    "GUARD_ENV_VAR",
    "BlockPattern",
    "CnfFormula",
    "Graph",
    "InstanceFile",
    "SatReductionMap",
    "SolveResult",
    "Span",
    "VcReductionMap",
    "WsaInstance",
    "alignment_weight",
    "amplify_sat_dummy_clauses",
    "brute_force_min_cover",
    "brute_force_satisfiable",
    "brute_force_satisfying",
    "check_alignment",
    "corrupt",
    "decide_weight_one",
    "decode_assignment",
    "decode_cover",
    "edit_distance",
    "encode_dual",
    "encode_matrix",
    "encode_partition",
    "evaluate",
    "hamming_distance",
    "ideal_block_pattern",
    "is_vertex_cover",
    "majority_decode",
    "parse_cnf",
    "parse_graph",
    "parse_instance",
    "run_experiment",
    "sat_to_pwsa_unique",
    "sat_to_wsa",
    "serialize_instance",
    "solve_exact",
    "solve_monotone_dp",
    "solve_pwsa",
    "to_cnf",
    "to_graph",
    "vc_to_wsa",
    "witness_from_assignment",
]
