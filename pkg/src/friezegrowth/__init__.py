"""Exact infinite friezes, continuants and tube friezes of affine cluster algebras."""

from .arith import (
    QQ,
    ZZ,
    LaurentPolynomial,
    LaurentRing,
    MalformedInputError,
    NotDivisibleError,
    SpecializationError,
    lp_exact_div,
    lp_mul,
    lp_normalize,
    lp_specialize,
)
from .cluster import (
    ExchangeMatrix,
    Seed,
    TubeSpec,
    bfs_find,
    check_skew_symmetrizable,
    d_vector,
    higher_theta,
    main_theorem_check,
    mutate,
    rs_identity_check,
    specialization_check,
    tube_frieze,
    tube_roots,
    x_delta,
)
from .frieze import (
    Frieze,
    chebyshev_extend,
    frieze_entry,
    growth_coefficient,
    homogeneous_frieze,
    minimal_period,
    verify_unimodularity,
)
from .kernels import BACKEND
from .universal import (
    continuant,
    cyclic_growth_poly,
    monomial_expansion,
    splitting_identity_check,
    universal_growth,
)

__version__ = "0.1.0"
