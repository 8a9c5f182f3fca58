"""Spinors as even multivectors: Clifford algebras Cl(p,q), spin groups,
Pauli and Dirac spinors, Lorentz 2-spinors, matrix representations and
the Wick rotation."""

from .algebra import (
    DEFAULT_TOL,
    Multivector,
    Paravector,
    Signature,
    Tolerance,
    basis_vectors,
    clifford_conjugate,
    commutator_product,
    even_part,
    exp_bivector,
    geometric_product,
    grade_involution,
    grade_project,
    inverse,
    odd_part,
    outer_product,
    paravector_split,
    pseudoscalar,
    reverse,
    scalar_product,
    versor_inverse,
)
from .errors import GAError, ParseError
from .textio import parse, serialize

__all__ = [
    "DEFAULT_TOL",
    "Multivector",
    "Paravector",
    "Signature",
    "Tolerance",
    "basis_vectors",
    "clifford_conjugate",
    "commutator_product",
    "even_part",
    "exp_bivector",
    "geometric_product",
    "grade_involution",
    "grade_project",
    "inverse",
    "odd_part",
    "outer_product",
    "paravector_split",
    "pseudoscalar",
    "reverse",
    "scalar_product",
    "versor_inverse",
    "GAError",
    "ParseError",
    "parse",
    "serialize",
]

__version__ = "0.1.0"
