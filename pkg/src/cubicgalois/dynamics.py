"""Characteristic-number dynamics and superclass graphs.

A class with characteristic number k is coupled to the classes with numbers
phi(k) = 27k/(2k+27) and psi(k) = 27k/|2k-27|. Superclasses are the connected
components of the resulting graph. Each one has a canonical generator: its
unique element >= 27, or the pole 27/2 for the chain 27/2, 27/4, 27/6, ...
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json
import math

from .classes import rep_from_k, rep_poly
from .errors import NegativeN, NonPositiveK, UndefinedAtPole
from .exactmath import as_rational, format_rational
from .poly import rational_roots

POLE = Fraction(27, 2)
FIXED_POINT = Fraction(27)

EXCEPTIONAL_NONE = "none"
EXCEPTIONAL_27 = "k27"
EXCEPTIONAL_27_OVER_2 = "k27_over_2"


def _positive(k):
    k = as_rational(k)
    if k <= 0:
        raise NonPositiveK(f"characteristic number must be positive, got {format_rational(k)}")
    return k


def phi(k):
    k = _positive(k)
    return 27 * k / (2 * k + 27)


def psi(k):
    k = _positive(k)
    if k == POLE:
        raise UndefinedAtPole("psi is undefined at k = 27/2")
    return 27 * k / abs(2 * k - 27)


def phi_iter(k, n):
    """n-fold phi in closed form, 27k/(2nk+27)."""
    k = _positive(k)
    if n < 0:
        raise NegativeN(f"iteration count must be >= 0, got {n}")
    return 27 * k / (2 * n * k + 27)


def generator(k):
    """Canonical generator of the superclass containing k.

    Climbs with psi until the value is >= 27 or hits the pole. Below 27/2
    each psi step subtracts 2/27 from 1/k, so that stretch is done in one
    jump.
    """
    k = _positive(k)
    if k < POLE:
        u = 1 / k
        n = math.ceil((27 * u - 2) / 2)
        k = 1 / (u - Fraction(2 * n, 27))
    while k < FIXED_POINT:
        if k == POLE:
            return k
        k = psi(k)
    return k


def coupled_rep_coefficients(k):
    """Representative coefficients (b, c) of the two coupled classes, from
    the closed forms in k. ``c`` is None at the pole."""
    k = _positive(k)
    b = Fraction(27, 4) * (31 * k**2 + 108 * k + 729) / (2 * k + 27) ** 2
    c = None
    if k != POLE:
        c = Fraction(27, 4) * (31 * k**2 - 108 * k + 729) / (2 * k - 27) ** 2
    return b, c


def coupled_char_numbers(k):
    """(phi(k), psi(k)), cross-checked against the closed-form coefficients."""
    k1, k2 = phi(k), psi(k)
    b, c = coupled_rep_coefficients(k)
    if b != rep_from_k(k1).a or c != rep_from_k(k2).a:
        raise AssertionError(f"coefficient formulas disagree with phi/psi at k={format_rational(k)}")
    return k1, k2


def is_reducible_rep(a):
    return bool(rational_roots(rep_poly(a)))


@dataclass(frozen=True)
class SuperclassNode:
    k: Fraction
    a: Fraction
    reducible: bool
    depth: int
    edge_from_parent: str  # "phi", "psi" or "root"


@dataclass
class SuperclassGraph:
    generator: Fraction
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (from_k, to_k, "phi"|"psi")
    exceptional: str = EXCEPTIONAL_NONE

    def ks(self):
        return [n.k for n in self.nodes]

    def node(self, k):
        k = as_rational(k)
        for n in self.nodes:
            if n.k == k:
                return n
        raise KeyError(format_rational(k))

    def to_dict(self):
        return {
            "generator": format_rational(self.generator),
            "exceptional": self.exceptional,
            "nodes": [
                {"k": format_rational(n.k), "a": format_rational(n.a),
                 "reducible": n.reducible, "depth": n.depth}
                for n in self.nodes
            ],
            "edges": [
                {"from": format_rational(u), "to": format_rational(v), "map": label}
                for u, v, label in self.edges
            ],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def to_dot(self):
        ids = {n.k: f"n{i}" for i, n in enumerate(self.nodes)}
        lines = [f'graph "superclass {format_rational(self.generator)}" {{']
        for n in self.nodes:
            label = f"k = {format_rational(n.k)}\\na = {format_rational(n.a)}"
            style = ', style="dashed"' if n.reducible else ""
            lines.append(f'  {ids[n.k]} [label="{label}"{style}];')
        for u, v, label in self.edges:
            lines.append(f'  {ids[u]} -- {ids[v]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _neighbours(k):
    yield "phi", phi(k)
    if k != POLE:
        yield "psi", psi(k)


def enumerate_superclass(k, max_nodes=16):
    """Breadth-first closure of k's superclass under phi and psi.

    Starts at ``generator(k)``; within a BFS level nodes are ordered by
    descending k. Stops after ``max_nodes`` nodes. Only edges between kept
    nodes are reported, one per unordered pair, oriented from the endpoint
    that discovered it.
    """
    k = _positive(k)
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    gen = generator(k)
    exceptional = {FIXED_POINT: EXCEPTIONAL_27, POLE: EXCEPTIONAL_27_OVER_2}.get(gen, EXCEPTIONAL_NONE)
    graph = SuperclassGraph(gen, exceptional=exceptional)

    def add_node(value, depth, via):
        a = rep_from_k(value).a
        graph.nodes.append(SuperclassNode(value, a, is_reducible_rep(a), depth, via))

    add_node(gen, 0, "root")
    seen = {gen}
    level = [gen]
    depth = 0
    while level and len(graph.nodes) < max_nodes:
        depth += 1
        found = {}
        for u in level:
            for label, v in _neighbours(u):
                if v not in seen and v not in found:
                    found[v] = label
        nxt = sorted(found, reverse=True)[: max_nodes - len(graph.nodes)]
        for v in nxt:
            add_node(v, depth, found[v])
            seen.add(v)
        level = nxt

    kept = set(graph.ks())
    pairs = set()
    for n in graph.nodes:
        for label, v in _neighbours(n.k):
            pair = frozenset((n.k, v))
            if v in kept and pair not in pairs:
                pairs.add(pair)
                graph.edges.append((n.k, v, label))
    return graph
