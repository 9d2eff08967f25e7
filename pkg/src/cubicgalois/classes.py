"""Linear-equivalence classes of cubics and their representatives x^3 - a*x - a.

Two cubics are equivalent when ``r = scale * p(alpha*x + beta)`` for some
nonzero ``scale`` and ``alpha``. The scalar is needed: substituting
``alpha*x + beta`` into a monic cubic multiplies the leading coefficient by
``alpha**3``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (DegenerateAffine, NoRepresentative, NonPositiveK,
                     NotASquare, RepeatedRoots, WrongDegree)
from .exactmath import as_rational, format_rational, rat_sqrt
from .galois import QuadMap
from .poly import MonicCubic, Poly, affine_sub, depress, discriminant_cubic


@dataclass(frozen=True)
class ClassRep:
    """The representative x^3 - a*x - a, with 4a - 27 = k^2 and k > 0."""

    a: Fraction
    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "k", as_rational(self.k))
        if self.k <= 0 or 4 * self.a - 27 != self.k * self.k:
            raise ValueError(
                f"not a class representative: a={format_rational(self.a)}, k={format_rational(self.k)}")

    def poly(self):
        return rep_poly(self.a)


@dataclass(frozen=True)
class AffineWitness:
    """``scale * source(alpha*x + beta) == target``."""

    alpha: Fraction
    beta: Fraction
    scale: Fraction

    def apply(self, p):
        return affine_sub(p, self.alpha, self.beta).scale(self.scale)

    def is_identity(self):
        return self.alpha == 1 and self.beta == 0 and self.scale == 1


def rep_poly(a):
    a = as_rational(a)
    return Poly((-a, -a, 0, 1))


def normalize(p):
    """Reduce any cubic with distinct roots to (a, witness) where
    ``witness.apply(p) == x^3 - a*x - a``.

    Works for every such cubic, Galois or not; ``representative`` adds the
    characteristic number on top.
    """
    if p.degree != 3:
        raise WrongDegree(f"expected a cubic, got degree {p.degree}")
    m = MonicCubic.from_poly(p)
    if discriminant_cubic(m) == 0:
        raise RepeatedRoots(f"{p} has a repeated root")
    P, Q = depress(m)
    if P == 0 or Q == 0:
        raise NoRepresentative(
            f"depressed form x^3 + ({format_rational(P)})x + ({format_rational(Q)}) "
            "cannot be scaled to x^3 - ax - a")
    lam = Q / P
    a = -P**3 / Q**2
    witness = AffineWitness(lam, -m.a / 3, 1 / (p.lead * lam**3))
    if witness.apply(p) != rep_poly(a):
        raise AssertionError("affine witness failed to reproduce the representative")
    return a, witness


def representative(p):
    """(ClassRep, AffineWitness) for a cubic whose class has a characteristic
    number. Raises NotASquare when 4a - 27 is not a rational square."""
    a, witness = normalize(p)
    if 4 * a - 27 <= 0:
        raise NotASquare(f"4a - 27 = {format_rational(4 * a - 27)} has no positive square root")
    return ClassRep(a, rat_sqrt(4 * a - 27)), witness


def char_number(rep):
    a = rep.a if isinstance(rep, ClassRep) else as_rational(rep)
    return rat_sqrt(4 * a - 27)


def rep_from_k(k):
    k = as_rational(k)
    if k <= 0:
        raise NonPositiveK(f"characteristic number must be positive, got {format_rational(k)}")
    return ClassRep((k * k + 27) / 4, k)


def is_equivalent(p, r):
    return normalize(p)[0] == normalize(r)[0]


def conjugate_map(q, alpha, beta):
    """(q(alpha*x + beta) - beta) / alpha."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha == 0:
        raise DegenerateAffine("conjugation needs alpha != 0")
    qp = q.to_poly() if isinstance(q, QuadMap) else q
    out = (affine_sub(qp, alpha, beta) - beta).scale(1 / alpha)
    return QuadMap.from_poly(out)
