"""Exact analysis of cubic polynomials with cyclic Galois group."""

from .classes import (AffineWitness, ClassRep, char_number, conjugate_map,
                      is_equivalent, normalize, rep_from_k, rep_poly,
                      representative)
from .dynamics import (SuperclassGraph, SuperclassNode, coupled_char_numbers,
                       coupled_rep_coefficients, enumerate_superclass,
                       generator, phi, phi_iter, psi)
from .errors import *  # noqa: F401,F403
from .exactmath import (Rational, format_rational, parse_rational, rat_sqrt,
                        rationalize)
from .field import (FieldComparison, RootTriple, family_t, real_roots,
                    root_expression, same_field)
from .galois import (GaloisCert, QuadMap, certify, coupled, coupled_pair,
                     perm_poly, perm_poly_cubic, perm_poly_rep,
                     verify_permutes)
from .poly import (MonicCubic, Poly, affine_sub, compose, depress,
                   discriminant_cubic, divrem, format_poly,
                   is_irreducible_cubic, mod_reduce, parse_poly,
                   rational_roots)

__version__ = "0.1.0"
