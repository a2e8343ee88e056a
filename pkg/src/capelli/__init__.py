"""Irreducibility of f(X^n) over Z, Z[i] and prime fields, with witnesses and brute-force oracles."""

from .admissible import (
    AdmissibleSpec,
    Shape,
    admissible_spec,
    corollary_5_1_bound,
    exponent_pair,
    is_inadmissible_prime,
    membership,
    unit_coefficients,
)
from .criteria import (
    Branch,
    CapelliCertificate,
    ConditionRow,
    ConditionTrace,
    Direction,
    Status,
    Verdict,
    capelli2_reducible,
    condition_C,
    corollary_4_5_reduction,
    resolve_with_oracle,
    squarefree_part,
    theorem_1_1_check,
)
from .errors import (
    CapelliError,
    DomainError,
    ExactDivisionError,
    InternalError,
    OracleBudgetExceeded,
    ParseError,
    PreconditionError,
    RingMismatchError,
    UnitCoefficientsError,
)
from .oracle import PolyFactorization, factor, factor_gaussian, factor_integers, factor_prime_field, is_irreducible
from .poly import (
    Polynomial,
    content,
    deflate,
    evaluate,
    inflate,
    parse_poly,
    poly,
    primitive_part,
    product_over_roots,
    reciprocal,
    resultant,
    sj_decompose,
    sj_recompose,
)
from .rings import GAUSSIAN, INTEGERS, GaussInt, I, PrimeFactorization, Ring, prime_field, ring_from_name
from .witness import (
    CyclotomicRecord,
    WitnessDecomposition,
    assess_pstar,
    build_pstar,
    circulant_det,
    corollary_4_6_check,
    cyclotomic,
    cyclotomic_factor_count,
    extract_witness,
    theorem_4_3_rhs,
    theorem_4_4_remark_applies,
    verify_witness,
)

__version__ = "0.1.0"
