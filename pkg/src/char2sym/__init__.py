"""char2sym: symmetric matrices with prescribed minimal polynomial over
fields of characteristic two.

A monic polynomial f over such a field is the minimal (equivalently
characteristic) polynomial of a symmetric matrix exactly when it is not
a product of pairwise distinct inseparable irreducibles.  This package
decides that criterion and, in the realizable case, constructs an
n x n symmetric witness by building transfer linear forms on
k[X]/(f_i) blocks, orthonormalizing their Gram matrix with a
characteristic-2 Gauss reduction, and conjugating the block companion
matrix.  Exact arithmetic throughout: GF(2^m) and GF(2^m)(t).
"""

from ._kernel import BACKEND as kernel_backend
from .bilinear import (
    Classification,
    ReductionResult,
    classify,
    congruence_check,
    gauss_reduce,
    is_unit_certifiable,
)
from .extension import (
    LocalAlgebra,
    SimpleExtension,
    local_reduce_power,
    trace_orthonormal_basis,
)
from .factor import (
    FactorDecomposition,
    FactorEntry,
    factor,
    is_irreducible,
    squarefree_decomposition,
    validate_factored_input,
)
from .fields import (
    GF2,
    BinaryField,
    RationalFunctionField,
    Scalar,
    field_from_spec,
)
from .linalg import (
    block_companion,
    char_poly,
    companion,
    identity,
    is_symmetric,
    mat_eq,
    mat_inv,
    mat_mul,
    matrix_from_strings,
    min_poly,
    render_matrix,
    transpose,
)
from .parsing import parse_factored, parse_poly, parse_scalar
from .poly import (
    Poly,
    binom_parity,
    inseparability_depth,
    is_separable,
    poly_gcd,
    poly_lcm,
    x_power_mod,
)
from .realize import (
    Realization,
    RealizationPlan,
    VerifyReport,
    decide,
    plan,
    realize,
    realize_eigen,
    verify,
)
from .transfer import (
    TransferForm,
    closed_form_value,
    crt_orthonormal_basis,
    direct_sum,
    even_form,
    insep_local_form,
    insep_power_form,
    point_form,
    sep_local_form,
    sep_power_form,
    square_block_form,
)

__version__ = "0.1.0"
