"""Separability analysis for two-qubit and small bipartite quantum states.

Detection criteria (partial transpose, reduction, concurrence, majorization,
realignment, correlation matrix, SIC correlations, local uncertainty
relations, witnesses, positive maps, four-observable correlations), a
constructive decomposition search, and a sweep/audit harness with a CLI.
"""
from .criteria import (
    CRITERIA,
    TOL,
    TSIRELSON,
    CriterionVerdict,
    Dichotomic,
    SicPovm,
    Verdict,
    apply_map,
    applicable_criteria,
    bloch_observable,
    ccnr,
    choi_of_identity,
    choi_of_reduction,
    choi_of_transpose,
    chsh_optimize,
    chsh_value,
    concurrence_mixed,
    concurrence_pure,
    correlation_matrix,
    dichotomic,
    entanglement_entropy,
    esic,
    evaluate,
    lur,
    lur_pauli_default,
    majorization,
    map_criterion,
    ppt,
    reduction,
    schmidt_rank_criterion,
    sic_povm,
    spin_flip,
    witness_eval,
    witness_swap,
)
from .decomposition import (
    LiQiaoCandidate,
    Residuals,
    SearchResult,
    candidate,
    liqiao_search,
    liqiao_verify,
    recompose,
)
from .harness import (
    FAMILIES,
    AuditSummary,
    FamilySpec,
    SweepReport,
    audit,
    family_state,
    render_audit,
    render_report,
    sweep,
    threshold_bisect,
)
from .kernels import BACKEND
from .linalg import (
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    BipartiteDims,
    eig_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    realign,
    singular_values,
    sqrt_psd,
    swap_operator,
    trace_norm,
)
from .states import (
    BELL_PHI_MINUS,
    BELL_PHI_PLUS,
    BELL_PSI_MINUS,
    BELL_PSI_PLUS,
    DensityMatrix,
    FanoForm,
    PureState,
    SchmidtData,
    bell_diagonal,
    fano_compose,
    fano_decompose,
    mixture,
    pure_state,
    pure_to_density,
    random_mixed,
    random_pure,
    random_separable,
    rho_p_family,
    schmidt,
    validate_density,
    werner,
)

__version__ = "0.1.0"
