"""Exact computer algebra for the algebra I_n of polynomial integro-differential
operators: canonical forms, the action on polynomials, the quotient B_n, the
lattice of two-sided ideals and unit recognition."""

from .action import Polynomial, apply, acts_as_zero, faithfulness_bound, word_action, zero_oracle
from .algebra import (
    MAT,
    POLY,
    Atom,
    E,
    H,
    Mat,
    Operator,
    Poly,
    add_scale,
    atom_mul,
    commutator,
    d,
    e,
    from_word,
    generator,
    grade_decompose,
    integral,
    involution,
    mul,
    sigma,
    tau,
    x,
)
from .errors import ArityError, DomainError, ParseError, ResourceGuardError
from .growth import filtration_dims, growth_slope
from .ideals import (
    IdealAC,
    contains,
    enumerate_ideals,
    factor_into_primes,
    height_and_chains,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_prime,
    make_ideal,
    membership,
    minimal_primes,
    prime_from_subset,
)
from .quotient import BnElement, bn_mul, bn_unit_check, project_bn
from .syntax import parse, parse_operator, parse_polynomial, print_canonical
from .units import FiniteMatrixPart, UnitDecision, global_det, is_unit, split_scalar_plus_f

__version__ = "0.1.0"
