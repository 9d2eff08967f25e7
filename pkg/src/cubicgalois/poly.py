"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending degree order with no trailing zeros, so
the zero polynomial has an empty coefficient tuple and degree ``-inf``.
All polynomials in this package have degree at most 8, which is why nothing
fancier than schoolbook arithmetic is used.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
import math

from .errors import (DegenerateAffine, DivisionByZeroPoly, ParseError,
                     WrongDegree)
from .exactmath import as_rational, format_rational, parse_rational

NEG_INF = -math.inf


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(as_rational(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def from_descending(cls, coeffs):
        return cls(reversed(list(coeffs)))

    @classmethod
    def parse(cls, text):
        """Parse either a descending coefficient list or an expression in x."""
        if "," in text:
            return parse_coeff_list(text)
        return parse_expr(text)

    # basic shape

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def monic(self):
        if not self.coeffs:
            raise DivisionByZeroPoly("zero polynomial has no monic form")
        return self.scale(1 / self.lead)

    def scale(self, c):
        c = as_rational(c)
        return Poly(a * c for a in self.coeffs)

    def descending(self):
        return list(reversed(self.coeffs))

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        # constants hash like the scalar they compare equal to
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; a Poly argument means composition."""
        if isinstance(x, Poly):
            return compose(self, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if self.coeffs else Fraction(0)

    def derivative(self):
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    # text

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def divrem(f, g):
    """Euclidean division: ``f == q*g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    inv_lead = 1 / g.lead
    if len(rem) - 1 < dg:
        return Poly(), f
    quot = [Fraction(0)] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] * inv_lead
        quot[i - dg] = c
        if c:
            for j, b in enumerate(g.coeffs):
                rem[i - dg + j] -= c * b
    return Poly(quot), Poly(rem[:dg])


def mod_reduce(f, m):
    return divrem(f, m)[1]


def compose(f, g):
    """f(g(x)), by Horner's scheme over polynomials."""
    acc = Poly()
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


def compose_mod(f, g, m):
    """f(g(x)) mod m, reducing after every Horner step."""
    g = mod_reduce(g, m)
    acc = Poly()
    for c in reversed(f.coeffs):
        acc = mod_reduce(acc * g + c, m)
    return acc


def affine_sub(p, alpha, beta):
    """p(alpha*x + beta)."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha == 0:
        raise DegenerateAffine("affine substitution needs alpha != 0")
    return compose(p, Poly((beta, alpha)))


@dataclass(frozen=True)
class MonicCubic:
    """x^3 + a*x^2 + b*x + c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def from_poly(cls, p):
        """Normalize a degree-3 polynomial to monic form."""
        if p.degree != 3:
            raise WrongDegree(f"expected a cubic, got degree {p.degree}")
        m = p.monic()
        return cls(m.coeffs[2], m.coeffs[1], m.coeffs[0])

    def to_poly(self):
        return Poly((self.c, self.b, self.a, 1))

    def __str__(self):
        return format_poly(self.to_poly())


def _as_monic_cubic(p):
    return p if isinstance(p, MonicCubic) else MonicCubic.from_poly(p)


def discriminant_cubic(p):
    """Discriminant of x^3+ax^2+bx+c (accepts a MonicCubic or any cubic Poly,
    which is first made monic)."""
    m = _as_monic_cubic(p)
    a, b, c = m.a, m.b, m.c
    return 18 * a * b * c - 4 * a**3 * c + a**2 * b**2 - 4 * b**3 - 27 * c**2


def depress(p):
    """(P, Q) with p(x - a/3) = x^3 + P*x + Q."""
    m = _as_monic_cubic(p)
    a, b, c = m.a, m.b, m.c
    return b - a**2 / 3, c - a * b / 3 + 2 * a**3 / 27


def primitive_integer(p):
    """Scale p to the primitive integer polynomial with positive leading
    coefficient; returns ascending integer coefficients."""
    if p.is_zero():
        raise DivisionByZeroPoly("zero polynomial has no primitive part")
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [i // g for i in ints]


def _divisors(n):
    """Positive divisors of |n| > 0 by trial division.

    Cost grows like sqrt of the largest prime factor; fine for the coefficient
    sizes that show up here, slow for enormous ones.
    """
    n = abs(n)
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [x * prime**e for x in divs for e in range(mult + 1)]
    return sorted(divs)


def poly_gcd(f, g):
    """Monic gcd (zero if both are zero)."""
    while not g.is_zero():
        f, g = g, divrem(f, g)[1]
    return f.monic() if not f.is_zero() else f


def squarefree_part(p):
    return divrem(p, poly_gcd(p, p.derivative()))[0]


# above this size the divisor enumeration is replaced by root isolation
DIVISOR_SEARCH_LIMIT = 10**12


def rational_roots_by_divisors(ints):
    """Rational-root test over +-(divisor of constant)/(divisor of leading)."""
    q = Poly(ints)
    roots = set()
    for num, den in product(_divisors(ints[0]), _divisors(ints[-1])):
        for cand in (Fraction(num, den), Fraction(-num, den)):
            if cand not in roots and q(cand) == 0:
                roots.add(cand)
    return roots


def rational_roots_by_isolation(ints):
    """Rational roots without factoring the coefficients.

    A root u/v in lowest terms has v <= |lead| = N, and distinct fractions
    with denominator <= N are at least 1/N^2 apart, so an isolating interval
    narrower than 1/(2N^2) pins down the only possible candidate.
    """
    from .field import isolate_real_roots, refine

    q = Poly(ints)
    sq = squarefree_part(q)
    n = abs(ints[-1])
    width = Fraction(1, 2 * n * n)
    roots = set()
    for lo, hi in isolate_real_roots(sq):
        lo, hi = refine(sq, lo, hi, width)
        cand = ((lo + hi) / 2).limit_denominator(n)
        if q(cand) == 0:
            roots.add(cand)
    return roots


def rational_roots(p):
    """All distinct rational roots of a nonzero polynomial."""
    if p.is_zero():
        raise DivisionByZeroPoly("the zero polynomial vanishes everywhere")
    ints = primitive_integer(p)
    roots = set()
    # strip the x^m factor so the constant term is nonzero
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.add(Fraction(0))
    ints = ints[low:]
    if len(ints) == 1:
        return roots
    if max(abs(ints[0]), abs(ints[-1])) <= DIVISOR_SEARCH_LIMIT:
        return roots | rational_roots_by_divisors(ints)
    return roots | rational_roots_by_isolation(ints)


def is_irreducible_cubic(p):
    if p.degree != 3:
        raise WrongDegree(f"expected a cubic, got degree {p.degree}")
    return not rational_roots(p)


# ---------------------------------------------------------------- text forms

def _format_term(coef, power, first):
    sign = "-" if coef < 0 else "+"
    mag = abs(coef)
    if power == 0:
        body = format_rational(mag)
    else:
        xpart = "x" if power == 1 else f"x^{power}"
        body = xpart if mag == 1 else f"{format_rational(mag)}*{xpart}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def format_poly(p):
    """Canonical expression form, e.g. ``x^3 - 343/36*x - 343/36``."""
    if p.is_zero():
        return "0"
    parts = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if c:
            parts.append(_format_term(c, power, not parts))
    return "".join(parts)


def parse_coeff_list(text):
    """Descending coefficient list such as ``1,0,-3,1``."""
    coeffs = []
    pos = 0
    for item in text.split(","):
        try:
            coeffs.append(parse_rational(item))
        except ParseError as e:
            raise ParseError(text, pos + e.pos, e.expected) from None
        pos += len(item) + 1
    return Poly.from_descending(coeffs)


class _ExprParser:
    """Recursive descent over::

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := power (['*'|'/'] power | power)*
        power  := atom ['^' integer]
        atom   := integer | 'x' | '(' expr ')'

    Juxtaposition (``3x``) multiplies. Division is only by constants.
    """

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, expected):
        raise ParseError(self.text, self.pos, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        if not self.text.strip():
            self.error("polynomial expression")
        result = self.expr()
        if self.peek():
            self.error("operator or end of input")
        return result

    def expr(self):
        ch = self.peek()
        negate = False
        if ch in ("+", "-"):
            self.pos += 1
            negate = ch == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while (ch := self.peek()) in ("+", "-"):
            self.pos += 1
            t = self.term()
            acc = acc + t if ch == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self.power()
            elif ch == "/":
                self.pos += 1
                start = self.pos
                d = self.power()
                if d.degree > 0 or d.is_zero():
                    self.pos = start
                    self.error("nonzero constant divisor")
                acc = acc.scale(1 / d.lead)
            elif ch and (ch.isdigit() or ch in "x("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("nonnegative integer exponent")
            base = base ** int(self.text[start:self.pos])
        return base

    def atom(self):
        ch = self.peek()
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Poly.const(int(self.text[start:self.pos]))
        if ch == "x":
            self.pos += 1
            return Poly.x()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("')'")
            self.pos += 1
            return inner
        self.error("integer, 'x' or '('")


def parse_expr(text):
    return _ExprParser(text).parse()


def parse_poly(text):
    return Poly.parse(text)
