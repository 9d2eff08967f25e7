"""Galois certificates, the quadratic root permutation and coupled cubics."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (InconsistentPair, InexactDivision, NonSquareOutput,
                     NotASquare, NotGalois, WrongDegree)
from .exactmath import as_rational, format_rational, is_square, rat_sqrt
from .poly import (MonicCubic, Poly, compose, compose_mod, discriminant_cubic,
                   divrem, format_poly, is_irreducible_cubic, mod_reduce)


@dataclass(frozen=True)
class GaloisCert:
    """Proof that ``poly`` is an irreducible cubic with square discriminant.

    ``d`` is the positive square root of ``D``; the permutation maps use
    either sign of it.
    """

    poly: MonicCubic
    D: Fraction
    d: Fraction

    def __post_init__(self):
        if self.D <= 0 or self.d <= 0 or self.d * self.d != self.D:
            raise ValueError("inconsistent certificate: need d > 0 and d^2 = D > 0")


@dataclass(frozen=True)
class QuadMap:
    """q(x) = alpha*x^2 + beta*x + gamma with alpha != 0."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.alpha == 0:
            raise ValueError("a permutation map must have degree exactly 2")

    @classmethod
    def from_poly(cls, q):
        if q.degree != 2:
            raise WrongDegree(f"expected a quadratic, got degree {q.degree}")
        return cls(q.coeffs[2], q.coeffs[1], q.coeffs[0])

    def to_poly(self):
        return Poly((self.gamma, self.beta, self.alpha))

    def __call__(self, x):
        return self.to_poly()(x)

    def __str__(self):
        return format_poly(self.to_poly())


def _as_poly(q):
    return q.to_poly() if isinstance(q, QuadMap) else q


def certify(p):
    """Certify that the cubic ``p`` is Galois, or raise NotGalois(reason).

    ``p`` may have any nonzero leading coefficient; it is made monic first.
    """
    m = MonicCubic.from_poly(p)
    D = discriminant_cubic(m)
    if D == 0:
        raise NotGalois(NotGalois.REPEATED_ROOTS)
    if not is_irreducible_cubic(m.to_poly()):
        raise NotGalois(NotGalois.REDUCIBLE)
    if D < 0 or not is_square(D):
        raise NotGalois(NotGalois.NON_SQUARE_DISCRIMINANT,
                        f"discriminant {format_rational(D)} is not a positive rational square")
    if m.a**2 - 3 * m.b == 0:
        # impossible for three real roots, kept as a guard
        raise NotGalois(NotGalois.DEGENERATE_ALPHA)
    return GaloisCert(m, D, rat_sqrt(D))


def _perm_from_coeffs(a, b, c, dd):
    # the linear coefficient carries 2a^3; with a^3 alone the map only
    # permutes roots of cubics with no x^2 term
    return QuadMap(
        (a**2 - 3 * b) / dd,
        (2 * a**3 + 9 * c - 7 * a * b - dd) / (2 * dd),
        (a**2 * b + 3 * a * c - 4 * b**2 - a * dd) / (2 * dd),
    )


def perm_poly(cert, sign):
    """The quadratic that cyclically permutes the roots of ``cert.poly``.

    ``sign`` (+1 or -1) selects the square root ``sign*|d|`` and with it one
    of the two cyclic orders of the roots.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = cert.poly
    return _perm_from_coeffs(m.a, m.b, m.c, sign * abs(cert.d))


def perm_poly_cubic(p, sign):
    """Same formula as ``perm_poly`` without the irreducibility check.

    Only needs the discriminant to be a nonzero rational square, so it also
    applies to split cubics such as reducible class representatives.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = MonicCubic.from_poly(_as_poly(p))
    D = discriminant_cubic(m)
    if D <= 0:
        raise NotASquare(f"discriminant {format_rational(D)} has no nonzero real square root")
    return _perm_from_coeffs(m.a, m.b, m.c, sign * rat_sqrt(D))


def perm_poly_rep(a, k):
    """Both permutation maps of the representative x^3 - a*x - a.

    Specialized closed forms; q1 matches ``perm_poly(..., +1)`` and q2
    matches ``perm_poly(..., -1)``.
    """
    a, k = as_rational(a), as_rational(k)
    if k <= 0 or 4 * a - 27 != k * k:
        raise InconsistentPair(
            f"need k > 0 and 4a - 27 = k^2, got a={format_rational(a)}, k={format_rational(k)}")
    q1 = QuadMap(3 / k, -(k + 9) / (2 * k), -2 * a / k)
    q2 = QuadMap(-3 / k, (9 - k) / (2 * k), 2 * a / k)
    return q1, q2


def verify_permutes(p, q):
    """True iff q maps the root set of the cubic p onto itself and is not the
    identity on it."""
    if p.degree != 3:
        raise WrongDegree(f"expected a cubic, got degree {p.degree}")
    qp = _as_poly(q)
    if qp.degree > 2:
        qp = mod_reduce(qp, p)
    # cheap necessary condition: a permutation of the roots keeps their sum
    lead = p.lead
    s1 = -p.coeff(2) / lead
    s2 = s1 * s1 - 2 * p.coeff(1) / lead
    if qp.coeff(2) * s2 + qp.coeff(1) * s1 + 3 * qp.coeff(0) != s1:
        return False
    if not compose_mod(p, qp, p).is_zero():
        return False
    return mod_reduce(qp, p) != Poly.x()


def coupled(p, q):
    """The monic cubic whose roots q also permutes cyclically.

    q∘q∘q - x has degree 8 and is divisible by p and by q - x; the remaining
    cubic factor is returned.
    """
    qp = _as_poly(q)
    x = Poly.x()
    s = compose(qp, compose(qp, qp)) - x
    quot, rem = divrem(s, p * (qp - x))
    if not rem.is_zero():
        raise InexactDivision("p*(q - x) does not divide q(q(q(x))) - x")
    if quot.degree != 3:
        raise InexactDivision(f"cofactor has degree {quot.degree}, expected 3")
    p1 = quot.monic()
    D1 = discriminant_cubic(p1)
    if D1 < 0 or not is_square(D1):
        raise NonSquareOutput(f"coupled cubic {p1} has discriminant {format_rational(D1)}")
    return p1


def coupled_pair(p):
    """Both coupled cubics of a Galois cubic, in sign order (+d, -d)."""
    cert = certify(p)
    return coupled(p, perm_poly(cert, 1)), coupled(p, perm_poly(cert, -1))


def try_certify(p):
    """certify() that returns None instead of raising NotGalois."""
    try:
        return certify(p)
    except NotGalois:
        return None
