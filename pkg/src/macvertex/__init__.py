"""macvertex: exact higher-spin six-vertex partition functions and their
Macdonald-polynomial limits at roots of unity."""

from macvertex.cyclotomic import (
    CyclotomicNumber,
    InvalidOrderError,
    OrderMismatchError,
    cyclotomic_polynomial,
    phi_degree,
    rational,
    zeta,
)
from macvertex.multipoly import (
    DivisibilityError,
    EvaluationError,
    MultiPoly,
    PolyMatrix,
    RationalFunction,
    bareiss_det,
    cofactor_det,
    det_fraction_free,
    univariate_pole_order,
    vandermonde_product,
)
from macvertex.partitions import (
    Partition,
    dominance_leq,
    dominance_lt,
    is_admissible,
    partitions_of,
    staircase,
)
from macvertex.symfun import (
    BranchParametrization,
    DegenerateDiagramError,
    PTSymbolicModel,
    SchurModel,
    SingularBranchError,
    SymFunExpansion,
    basis_change_monomial_powersum,
    branch_params,
    macdonald,
    macdonald_at_combinatorial_point,
    monomial_sym,
    power_sum,
    pt_inner_product,
    schur,
    schur_ones,
    symfun_from_multipoly,
    z_lambda,
)
from macvertex.vertex import (
    ConfigError,
    FusionInvarianceError,
    GridConfig,
    HigherSpinASM,
    ResourceError,
    WeightTensor,
    annihilation_rmatrix,
    brute_force_configs,
    config_to_hsasm,
    count_configs,
    determinant_side_value,
    enumerate_hsasm,
    enumerate_partition_function,
    extend_spectral,
    fused_determinant,
    fused_determinant_interp,
    fused_determinant_point,
    fused_r,
    gamma_const,
    leading_coefficient,
    q_factorial,
    q_integer,
    r_matrix,
    recursion_check,
    symmetric_state,
    transfer_matrix,
    weight_abc,
)
from macvertex.wheelcheck import (
    WheelChain,
    WheelPreconditionError,
    WheelReport,
    check_Vn_membership,
    check_wheel,
    wheel_chains,
)

__all__ = [
    "BranchParametrization",
    "ConfigError",
    "CyclotomicNumber",
    "DegenerateDiagramError",
    "DivisibilityError",
    "EvaluationError",
    "FusionInvarianceError",
    "GridConfig",
    "HigherSpinASM",
    "InvalidOrderError",
    "MultiPoly",
    "OrderMismatchError",
    "PTSymbolicModel",
    "Partition",
    "PolyMatrix",
    "RationalFunction",
    "ResourceError",
    "SchurModel",
    "SingularBranchError",
    "SymFunExpansion",
    "WeightTensor",
    "WheelChain",
    "WheelPreconditionError",
    "WheelReport",
    "annihilation_rmatrix",
    "bareiss_det",
    "basis_change_monomial_powersum",
    "branch_params",
    "brute_force_configs",
    "check_Vn_membership",
    "check_wheel",
    "cofactor_det",
    "config_to_hsasm",
    "count_configs",
    "cyclotomic_polynomial",
    "det_fraction_free",
    "determinant_side_value",
    "dominance_leq",
    "dominance_lt",
    "enumerate_hsasm",
    "enumerate_partition_function",
    "extend_spectral",
    "fused_determinant",
    "fused_determinant_interp",
    "fused_determinant_point",
    "fused_r",
    "gamma_const",
    "is_admissible",
    "leading_coefficient",
    "macdonald",
    "macdonald_at_combinatorial_point",
    "monomial_sym",
    "partitions_of",
    "phi_degree",
    "power_sum",
    "pt_inner_product",
    "q_factorial",
    "q_integer",
    "r_matrix",
    "rational",
    "recursion_check",
    "schur",
    "schur_ones",
    "staircase",
    "symfun_from_multipoly",
    "symmetric_state",
    "transfer_matrix",
    "univariate_pole_order",
    "vandermonde_product",
    "weight_abc",
    "wheel_chains",
    "z_lambda",
    "zeta",
]
