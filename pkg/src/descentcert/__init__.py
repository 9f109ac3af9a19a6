"""descentcert: exact computations and root certificates for descent polynomials."""

from .errors import (
    ConstantPolynomial,
    CutoffExceeded,
    DegreeGapTooLarge,
    DescentCertError,
    DuplicateAbscissa,
    DuplicateEntry,
    HypothesisViolated,
    IndexOutOfRange,
    InvalidN,
    NonIntegerProduct,
    NonIntegerResult,
    NonPositiveLeading,
    NotRealRooted,
    NotSquarefree,
    StructureUnexpected,
    ZeroPolynomial,
)
from .eulerian import (
    KFamily,
    RefinedFamily,
    boundary_identities_check,
    eulerian,
    eulerian_by_enumeration,
    how_coefficient_vectors,
    k_family,
    k_polynomial,
    matrix_recurrence_check,
    refined_by_enumeration,
    refined_eulerian,
    weighted_sum_identity_check,
)
from .hurwitz import (
    Boundary,
    HurwitzInput,
    ThresholdResult,
    det_polys_in_k,
    distinct_real_by_hurwitz,
    family_poly_at,
    hurwitz_det,
    hurwitz_input_for,
    thresholds,
)
from .polynomial import ONE, Poly, Rat, X, ZERO, format_rat, interpolate, parse_rat
from .rootcert import (
    RootCertificate,
    RootIsolation,
    SturmChain,
    count_distinct_real_roots,
    how_combination_check,
    interlaces,
    is_real_rooted,
    isolate_roots,
    pairwise_interlacing,
    poly_gcd,
    sturm_chain,
)
from .stacksort import (
    DescentTable,
    descent_count,
    descent_table,
    is_t_stack_sortable,
    narayana_poly,
    sortable_descent_counts,
    stack_sort_once,
    w2_closed_form,
    wn_n_minus_2_identity_check,
)
from .tangent import (
    TangentSeq,
    conjectured_Omega,
    omega_formula,
    tangent_numbers,
    tangent_product_check,
)

__version__ = "0.1.0"
