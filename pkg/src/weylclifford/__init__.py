"""Exact and numerical tools for Weyl-Clifford algebras T(n, l).

Generators satisfy t_j t_k = zeta t_k t_j for j < k and t_k^l = 1 with
zeta a primitive l-th root of unity; at l = 2 this is the complex
Clifford algebra.  The package provides exact cyclotomic arithmetic,
normal-form symbolic algebra with the power-sum (Lame) identity,
deformed binomial coefficients, tensor-product matrix representations,
commutator-form transport over the rationals, and a CLI.
"""

from .cyclotomic import (
    CyclotomicNumber,
    IntPolynomial,
    OrderMismatchError,
    cyclotomic_polynomial,
    root_of_unity,
    totient,
)
from .algebra import (
    AlgebraElement,
    AlgebraSignature,
    SignatureMismatchError,
    default_cyclotomic_order,
    generator,
    identity,
    is_central,
    lame_check,
    linear_combination,
    monomial,
    to_matrix,
    weak_from_group_phases,
    zero,
)
from .qbinom import (
    commuting_factorization_check,
    deformed_binomial_theorem_check,
    q_binomial,
    q_factorial,
    q_int,
    r_poly,
)
from .matrep import (
    GeneratorSet,
    RelationReport,
    ReducibleRepresentationError,
    WeylRelationError,
    clifford_generators,
    conjugate_generators,
    conjugated_triple,
    degenerate_pair,
    extract_tau_site,
    fourier,
    lame_residual,
    pauli,
    reducible_pair,
    reducible_pair_permutation,
    span_dimension,
    standardize_weyl_pair,
    t_generators,
    tau_triple,
    verify_relations,
    weyl_pair,
)
from .commforms import (
    canonical_form,
    clifford_form,
    conjugate_to_N,
    diagonal_symplectic,
    is_antisymmetric,
    is_symplectic,
    matrix_L,
    matrix_Lprime,
    random_symplectic,
    symplectic_shear,
    symplectic_transvection,
    transform_form,
)

__version__ = "0.1.0"
