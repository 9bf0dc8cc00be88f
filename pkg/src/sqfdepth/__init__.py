"""Exact depth and minimal Stanley depth for square-free monomial factors.

The package decides depth of I/J (and of I, S/I) by computing Koszul
homology per square-free multidegree with exact linear algebra, checks
the count criteria that pin depth to the bottom generator degree,
produces certifying witnesses (explicit homology cycles, bipartite
matching certificates, Hall violators), and ships a seeded scan harness
that stress-tests every criterion against the homology engine.
"""
from .core import (
    MAX_VARS,
    FactorPair,
    ModulePredicate,
    Monomial,
    MonomialIdeal,
    Role,
    colon_by_variable,
    contains,
    enumerate_degree,
    factor_monomials,
    factor_pair,
    format_ideal,
    ideal_from_lists,
    ideal_to_lists,
    intersect,
    load_pair_text,
    minimalize,
    monomial,
    pair_from_json,
    pair_to_json,
    parse_ideal,
    parse_monomial,
    restrict_to_subring,
    rho,
    sum_ideals,
    zero_ideal,
)
from .errors import (
    DegenerateReductionError,
    GuardExceededError,
    NotApplicableError,
    NotNormalizedError,
    ParseError,
    SqfdepthError,
    TooLargeError,
    UnsatisfiableError,
)
from .harness import (
    InstanceParams,
    ScanReport,
    evaluate_rule,
    random_ideal,
    random_pair,
    read_report,
    replay_record,
    scan,
    write_report,
)
from .homology import (
    DepthReport,
    Witness,
    build_complex,
    depth,
    depth_factor,
    depth_ideal,
    depth_quotient,
    homology_dims,
    projective_dimension,
)
from .linalg import DEFAULT_FIELD, RATIONALS, FieldSpec
from .reference import named_instances, verify_examples
from .stanley import (
    DivisibilityGraph,
    HallCertificate,
    build_graph,
    brute_force_sdepth,
    hall_certificate,
    max_matching,
    sdepth_equals_indeg,
)
from .theorems import (
    KoszulWitness,
    NormalizedPair,
    check_corollary_str,
    check_theorem_main,
    check_theorem_main1,
    decompose_last_variable,
    is_normalized,
    join_last_variable,
    koszul_witness,
    normalize_pair,
    quick_certificates,
    stanley_min_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_VARS",
    "Monomial",
    "MonomialIdeal",
    "FactorPair",
    "ModulePredicate",
    "Role",
    "monomial",
    "minimalize",
    "zero_ideal",
    "contains",
    "enumerate_degree",
    "rho",
    "intersect",
    "sum_ideals",
    "colon_by_variable",
    "restrict_to_subring",
    "factor_pair",
    "factor_monomials",
    "parse_monomial",
    "parse_ideal",
    "format_ideal",
    "ideal_to_lists",
    "ideal_from_lists",
    "pair_to_json",
    "pair_from_json",
    "load_pair_text",
    "FieldSpec",
    "DEFAULT_FIELD",
    "RATIONALS",
    "DepthReport",
    "Witness",
    "build_complex",
    "homology_dims",
    "projective_dimension",
    "depth",
    "depth_factor",
    "depth_ideal",
    "depth_quotient",
    "DivisibilityGraph",
    "HallCertificate",
    "build_graph",
    "max_matching",
    "hall_certificate",
    "sdepth_equals_indeg",
    "brute_force_sdepth",
    "NormalizedPair",
    "normalize_pair",
    "is_normalized",
    "check_theorem_main",
    "koszul_witness",
    "KoszulWitness",
    "quick_certificates",
    "decompose_last_variable",
    "join_last_variable",
    "check_theorem_main1",
    "check_corollary_str",
    "stanley_min_pipeline",
    "InstanceParams",
    "ScanReport",
    "random_pair",
    "random_ideal",
    "scan",
    "evaluate_rule",
    "replay_record",
    "write_report",
    "read_report",
    "named_instances",
    "verify_examples",
    "SqfdepthError",
    "ParseError",
    "GuardExceededError",
    "TooLargeError",
    "NotNormalizedError",
    "NotApplicableError",
    "DegenerateReductionError",
    "UnsatisfiableError",
    "__version__",
]
