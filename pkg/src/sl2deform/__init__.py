"""Exact-arithmetic toolkit for cubic polynomial deformations of sl(2,R).

Builds and verifies finite-dimensional representations of the deformed
algebra [J0, J+-] = +-J+-, [J+, J-] = alpha J0^3 + beta J0^2 + gamma J0 + delta,
together with their realizations by linear differential operators preserving
the monomial module spanned by {1, x, x^3}.  All arithmetic is exact, over
the rationals or a single quadratic extension.
"""

from .algebra import (
    AlgebraParams,
    MatrixTriple,
    RelationResiduals,
    build_classic_sl2_diffops,
    build_classic_sl2_matrices,
    casimir_matrix,
    check_deformed_relations,
    classic_norm_squares,
    cubic_in,
)
from .cases import CaseId
from .diffops import (
    ClosureReport,
    DiffOp,
    LieClosureReport,
    MonomialSpace,
    NegativeExponentError,
    PolyK,
    SpaceEscapeError,
    SymbolicAction,
    V3,
    build_case_realization,
    closure_check,
    commutator_op,
    compose,
    enumerate_preserving_operators,
    lie_closure_probe,
    parse_diffop,
)
from .matrices import (
    BlockSplit,
    Matrix,
    commutator,
    coordinate_block_split,
    is_scalar_multiple_of_identity,
)
from .reps import (
    CaseSolution,
    IntrinsicData,
    RepBlock,
    RepSpec,
    TrivialAlgebraError,
    build_new_rep_matrices,
    case_rep_spec,
    constraint_residuals,
    decompose_rep,
    enumerate_case_labels,
    intrinsic_gamma_and_product,
    p_and_a,
    solve_case,
)
from .scalars import (
    NegativeRadicandError,
    QuadExt,
    Rational,
    Scalar,
    ScalarDomainError,
    parse_scalar,
    quadext,
    render_scalar,
    scalar_arith,
    scalar_is_zero,
    sqrt_exact,
    squarefree_split,
)

__all__ = [
    "AlgebraParams",
    "BlockSplit",
    "CaseId",
    "CaseSolution",
    "ClosureReport",
    "DiffOp",
    "IntrinsicData",
    "LieClosureReport",
    "Matrix",
    "MatrixTriple",
    "MonomialSpace",
    "NegativeExponentError",
    "NegativeRadicandError",
    "PolyK",
    "QuadExt",
    "Rational",
    "RelationResiduals",
    "RepBlock",
    "RepSpec",
    "Scalar",
    "ScalarDomainError",
    "SpaceEscapeError",
    "SymbolicAction",
    "TrivialAlgebraError",
    "V3",
    "build_case_realization",
    "build_classic_sl2_diffops",
    "build_classic_sl2_matrices",
    "build_new_rep_matrices",
    "case_rep_spec",
    "casimir_matrix",
    "check_deformed_relations",
    "classic_norm_squares",
    "closure_check",
    "commutator",
    "commutator_op",
    "compose",
    "constraint_residuals",
    "coordinate_block_split",
    "cubic_in",
    "decompose_rep",
    "enumerate_case_labels",
    "enumerate_preserving_operators",
    "intrinsic_gamma_and_product",
    "is_scalar_multiple_of_identity",
    "lie_closure_probe",
    "p_and_a",
    "parse_diffop",
    "parse_scalar",
    "quadext",
    "render_scalar",
    "scalar_arith",
    "scalar_is_zero",
    "solve_case",
    "sqrt_exact",
    "squarefree_split",
]
