"""Computing with Lagrangian configurations and symplectic cross-ratios.

Exact rational or complex floating arithmetic for: validating cyclic line
configurations in symplectic 2n-space, their symplectic cross-ratios and the
single relation they satisfy at N = 2n+2, Pfaffian and continuant identities,
construction from cross-ratio coordinates, equivalence testing with explicit
symplectic witnesses, normalization schemes, the correspondence with periodic
symmetric difference operators of monodromy -Id, and the generalized Gauss
relations at N = 2n+3.
"""

from .configuration import (
    Configuration,
    ValidityReport,
    config_from_json,
    cross_ratio,
    cyclic_distance,
    diametric_cross_ratios,
    gamma,
    opposite,
    random_config,
    sequence_cross_ratios,
    sign_invariant,
    standardize,
    validate,
)
from .continuants import (
    OmegaData,
    TridiagData,
    block_pfaffian,
    continuant,
    cyclic_continuant,
    gen_eq_value,
    index_set,
    pfaffian,
    pfaffian_omega,
    tridiag_det,
)
from .diffop import (
    DifferenceOperator,
    basis_solution,
    config_from_operator,
    is_in_monodromy_class,
    kernel_gram,
    monodromy,
    operator_from_config,
    operator_from_json,
    rescale,
    solve,
    wronskian,
)
from .errors import LagError
from .fields import COMPLEX, RATIONAL, FieldContext, arith, complex_ctx, rational_ctx
from .gauss import (
    MainDiagonals,
    gauss_cross_ratio_residuals,
    gauss_residuals,
    normalize_2n3,
    pentagon_matrix_product,
)
from .moduli import (
    EquivalenceVerdict,
    NormalizationResult,
    check_relation,
    classify_trivial,
    continuant_check,
    equivalent,
    from_cross_ratios,
    normalize,
    random_relation_vector,
    solve_last_cross_ratio,
)
from .symplectic import (
    GramMatrix,
    gram,
    is_symplectic,
    omega,
    random_symplectic,
    reconstruct_transform,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
