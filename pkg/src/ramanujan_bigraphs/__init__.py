"""Exact-arithmetic workbench for unitary-group Ramanujan bigraphs.

Subpackages
-----------
numberfield
    Exact arithmetic in Q(sqrt(-3)) and Q(zeta_9), Galois actions, relative
    norms/traces, prime splitting, and the local norm-obstruction test.
algebra
    The degree-3 cyclic algebra with involution of the second kind, reduced
    norm, special-unitary membership, construction-condition verification,
    and the archimedean realization.
graphs
    Graph structure analysis, spectra, Ramanujan certification, expansion
    coefficients, generators, and JSON/DOT interchange.
trees
    Biregular tree balls and covering/quotient validators.
lattices
    Prime classification, residue rings over Z[omega], finite special
    unitary group enumeration, and congruence-tower indices.
cli
    The ``ramanujan-bigraphs`` command.
"""

from .numberfield import (
    CubicExtElem,
    CycloElem,
    ObstructionReport,
    QuadElem,
    cubic_norm,
    cubic_trace,
    embed_E_in_L,
    galois_rho,
    galois_tau,
    hensel_sqrt_minus3,
    is_in_E,
    is_prime,
    local_norm_obstruction,
    norm_L_over_E,
    norm_trace_L_over_E,
    project_to_E,
    quad_from_sqrt3_basis,
    splitting_data,
    trace_L_over_E,
)
from .algebra import (
    GALOIS,
    NONGALOIS,
    AlgebraElem,
    AlgebraParams,
    ConditionReport,
    check_theorem_conditions,
    example_galois_params,
    example_nongalois_params,
    inverse,
    involution,
    is_special_unitary,
    matrix_at_infinity,
    realize_at_infinity,
    reduced_norm,
    reduced_trace,
    to_matrix,
    verify_noncompact_torus,
)
from .graphs import (
    BiregularProfile,
    Graph,
    GraphClassError,
    GraphError,
    RamanujanCertificate,
    RegularProfile,
    SpectralStructureError,
    Spectrum,
    analyze_structure,
    bound_values,
    certify_ramanujan,
    complete_bipartite,
    cycle,
    expansion_coefficient,
    graph_from_json,
    graph_to_json,
    lambda_of,
    random_biregular,
    spectrum,
    to_dot,
)
from .trees import (
    CoveringCandidate,
    TreeBall,
    biregular_tree_ball,
    check_local_covering,
    level_counts_closed_form,
    quotient_handshake_check,
)
from .lattices import (
    FiniteGroupReport,
    IndexEntry,
    LatticeError,
    PrimeClass,
    ResidueRing,
    classify_prime,
    congruence_tower,
    enumerate_su3,
    good_primes_up_to,
    sl3_order_formula,
    su3_order_formula,
)

__version__ = "0.1.0"
