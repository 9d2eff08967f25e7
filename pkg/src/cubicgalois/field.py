"""Real roots, same-field detection and the parametric family x^3 - t*x - t.

Field comparison is a bounded decision procedure. For cubics f and p we look
for g of degree <= 2 with p(g(x)) = 0 mod f, i.e. a rational expression of a
root of p in terms of a root of f. Candidates come from interpolating each of
the six root matchings on approximate roots and snapping the coefficients to
rationals with denominator <= max_den; a candidate is accepted only on the
exact identity. So "verified" is a proof, while "absent" means absent at that
bound.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
import math

from .errors import NotThreeRealRoots, PoleOfFamily, WrongDegree
from .exactmath import as_rational, format_rational, rationalize
from .galois import certify
from .poly import Poly, compose, discriminant_cubic, divrem, mod_reduce

DEFAULT_MAX_DEN = 10**12

STATUS_VERIFIED = "verified"
STATUS_ABSENT = "absent"


@dataclass(frozen=True)
class RootTriple:
    """Disjoint ascending isolating intervals, one real root in each."""

    intervals: tuple  # ((lo, hi), ...) with Fraction endpoints
    approx: tuple     # float midpoints

    def __iter__(self):
        return iter(self.approx)


def sturm_sequence(p):
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = divrem(seq[-2], seq[-1])[1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq, x):
    signs = [v for v in (q(x) for q in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u < 0) != (v < 0))


def root_bound(p):
    """Every real root satisfies |x| < 1 + max |c_i / c_n|."""
    lead = p.lead
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def _split_point(p, lo, hi):
    for t in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 5)):
        mid = lo + (hi - lo) * t
        if p(mid) != 0:
            return mid
    raise AssertionError("more than three roots on an interval of a cubic")


def isolate_real_roots(p):
    """Isolating intervals (lo, hi) with p(lo)*p(hi) < 0 for every real root
    of a squarefree polynomial, sorted ascending."""
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = _split_point(p, lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def refine(p, lo, hi, width):
    """Shrink an isolating interval to width <= ``width`` by exact bisection."""
    width = as_rational(width)
    plo = p(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        pm = p(mid)
        if pm == 0:
            delta = min(width / 4, (mid - lo) / 2, (hi - mid) / 2)
            return mid - delta, mid + delta
        if (pm < 0) == (plo < 0):
            lo, plo = mid, pm
        else:
            hi = mid
    return lo, hi


def real_roots(p, eps=Fraction(1, 10**12)):
    """Three isolating intervals of width <= eps for a cubic with three real
    roots."""
    if p.degree != 3:
        raise WrongDegree(f"expected a cubic, got degree {p.degree}")
    D = discriminant_cubic(p)
    if D <= 0:
        raise NotThreeRealRoots(f"discriminant {format_rational(D)} is not positive")
    eps = as_rational(eps)
    intervals = tuple(refine(p, lo, hi, eps) for lo, hi in isolate_real_roots(p))
    return RootTriple(intervals, tuple(float((lo + hi) / 2) for lo, hi in intervals))


def _solve3(m, rhs):
    """Cramer's rule on a 3x3 system with exact entries."""
    def det(a):
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    d = det(m)
    out = []
    for col in range(3):
        mc = [row[:col] + [rhs[i]] + row[col + 1:] for i, row in enumerate(m)]
        out.append(det(mc) / d)
    return out


def _working_width(f, p, max_den):
    """Root width that keeps interpolated coefficients within 1/(2 max_den^2)
    of their exact values, from a crude bound on the inverse Vandermonde."""
    bf, bp = root_bound(f), root_bound(p)
    D = discriminant_cubic(f)
    # |det V| = sqrt(disc f) for monic f; take a lower bound
    det_lb = Fraction(math.isqrt(D.numerator), math.isqrt(D.denominator) + 1)
    inv_norm = 6 * (1 + bf) ** 3 / det_lb
    amp = inv_norm * (1 + 6 * (1 + bf) * inv_norm * bp)
    return Fraction(1, 2 * max_den**2) / (amp * 2**20)


def candidate_maps(f, p, max_den=DEFAULT_MAX_DEN):
    """Every g (deg <= 2) with p(g) = 0 mod f found by the six-matching search,
    each exactly verified. Duplicates are removed; order follows the search."""
    fm, pm = f.monic(), p.monic()
    width = _working_width(fm, pm, max_den)
    rf = [(lo + hi) / 2 for lo, hi in real_roots(fm, width).intervals]
    rp = [(lo + hi) / 2 for lo, hi in real_roots(pm, width).intervals]
    vander = [[Fraction(1), r, r * r] for r in rf]
    found = []
    for target in permutations(rp):
        approx = _solve3(vander, list(target))
        g = Poly(rationalize(c, max_den) for c in approx)
        if g not in found and mod_reduce(compose(pm, g), fm).is_zero():
            found.append(g)
    return found


def root_expression(f, p, max_den=DEFAULT_MAX_DEN):
    """A g of degree <= 2 with p(g(x)) = 0 mod f, or None if none is found
    within the denominator bound. Both inputs must be Galois cubics."""
    certify(f)
    certify(p)
    maps = candidate_maps(f, p, max_den)
    return maps[0] if maps else None


@dataclass(frozen=True)
class FieldComparison:
    same: bool
    status: str
    expression: Poly = None
    max_den: int = DEFAULT_MAX_DEN

    def describe(self):
        if self.same:
            return f"exactly verified: root = {self.expression}"
        return f"absent at bound {format_bound(self.max_den)}"


def format_bound(n):
    e = round(math.log10(n)) if n > 0 else 0
    return f"10^{e}" if 10**e == n else str(n)


def same_field(f, p, max_den=DEFAULT_MAX_DEN):
    """Whether two Galois cubics have the same root field.

    For cyclic cubics one root of p lying in Q(root of f) already forces
    equality of the fields.
    """
    g = root_expression(f, p, max_den)
    if g is None:
        return FieldComparison(False, STATUS_ABSENT, None, max_den)
    return FieldComparison(True, STATUS_VERIFIED, g, max_den)


FAMILY_NUM = Poly((1594323, 2187, 1))                 # y^2 + 2187y + 3^13
FAMILY_DEN = Poly((-3486784401, -4782969, 0, 1))      # y^3 - 3^14 y - 3^20


def family_t(y):
    """t(y) = 27 (y^2 + 2187y + 1594323)^3 / (y^3 - 4782969y - 3486784401)^2."""
    y = as_rational(y)
    den = FAMILY_DEN(y)
    if den == 0:
        raise PoleOfFamily(f"family denominator vanishes at y = {format_rational(y)}")
    return 27 * FAMILY_NUM(y) ** 3 / den**2
