"""Command-line front end.

Every subcommand builds a plain dict of strings/bools/lists; ``--json`` dumps
it and text mode prints the same values as ``key: value`` lines, so the two
modes cannot disagree.

Exit codes: 0 success, 1 domain error (NotGalois, UndefinedAtPole, ...),
2 parse error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import classes, dynamics, field, galois
from .errors import DomainError, ParseError
from .exactmath import format_rational, parse_rational
from .poly import format_poly, parse_coeff_list, parse_expr

DEFAULT_MAX_NODES = 16
DEFAULT_PRECISION = Fraction(1, 10**12)
DEFAULT_MAX_DEN = field.DEFAULT_MAX_DEN


def _poly_arg(args, text):
    if args.coeffs or "," in text:
        return parse_coeff_list(text)
    return parse_expr(text)


def _witness(w):
    return {"alpha": format_rational(w.alpha), "beta": format_rational(w.beta),
            "scale": format_rational(w.scale)}


def _decimal(x, digits):
    return f"{x:.{digits}f}"


def _digits(precision):
    digits = 0
    while Fraction(1, 10**digits) > precision:
        digits += 1
    return digits


def cmd_analyze(args):
    p = _poly_arg(args, args.poly)
    cert = galois.certify(p)
    q_plus, q_minus = galois.perm_poly(cert, 1), galois.perm_poly(cert, -1)
    c_plus, c_minus = galois.coupled(p, q_plus), galois.coupled(p, q_minus)
    rep, witness = classes.representative(p)
    precision = parse_rational(args.precision)
    roots = field.real_roots(p, precision)
    digits = _digits(precision)
    return {
        "polynomial": format_poly(p),
        "monic": format_poly(cert.poly.to_poly()),
        "galois": True,
        "D": format_rational(cert.D),
        "d": format_rational(cert.d),
        "perm_plus": str(q_plus),
        "perm_minus": str(q_minus),
        "coupled_plus": format_poly(c_plus),
        "coupled_minus": format_poly(c_minus),
        "representative": format_poly(rep.poly()),
        "a": format_rational(rep.a),
        "k": format_rational(rep.k),
        "witness": _witness(witness),
        "real_roots": [_decimal(r, digits) for r in roots.approx],
    }


def cmd_couple(args):
    p = _poly_arg(args, args.poly)
    cert = galois.certify(p)
    signs = {"+": [1], "-": [-1], None: [1, -1]}[args.sign]
    out = {"polynomial": format_poly(p)}
    for s in signs:
        name = "plus" if s > 0 else "minus"
        q = galois.perm_poly(cert, s)
        out[f"perm_{name}"] = str(q)
        out[f"coupled_{name}"] = format_poly(galois.coupled(p, q))
    return out


def cmd_rep(args):
    p = _poly_arg(args, args.poly)
    rep, witness = classes.representative(p)
    return {
        "polynomial": format_poly(p),
        "representative": format_poly(rep.poly()),
        "a": format_rational(rep.a),
        "k": format_rational(rep.k),
        "witness": _witness(witness),
    }


def cmd_char(args):
    rep = classes.rep_from_k(parse_rational(args.k))
    return {
        "k": format_rational(rep.k),
        "a": format_rational(rep.a),
        "representative": format_poly(rep.poly()),
        "reducible": dynamics.is_reducible_rep(rep.a),
    }


def cmd_phi(args):
    k = parse_rational(args.k)
    if args.iter is None:
        return {"k": format_rational(k), "phi": format_rational(dynamics.phi(k))}
    return {"k": format_rational(k), "n": args.iter,
            "phi_iter": format_rational(dynamics.phi_iter(k, args.iter))}


def cmd_psi(args):
    k = parse_rational(args.k)
    return {"k": format_rational(k), "psi": format_rational(dynamics.psi(k))}


def cmd_generator(args):
    k = parse_rational(args.k)
    return {"k": format_rational(k), "generator": format_rational(dynamics.generator(k))}


def cmd_superclass(args):
    return dynamics.enumerate_superclass(parse_rational(args.k), args.max_nodes)


def cmd_samefield(args):
    f = _poly_arg(args, args.poly1)
    p = _poly_arg(args, args.poly2)
    res = field.same_field(f, p, args.max_den)
    return {
        "poly1": format_poly(f),
        "poly2": format_poly(p),
        "same_field": res.same,
        "status": res.status,
        "detail": res.describe(),
        "expression": format_poly(res.expression) if res.expression is not None else None,
        "max_den": str(res.max_den),
    }


def cmd_family(args):
    y = parse_rational(args.y)
    t = field.family_t(y)
    rep = classes.rep_poly(t)
    cert = galois.try_certify(rep)
    out = {
        "y": format_rational(y),
        "t": format_rational(t),
        "polynomial": format_poly(rep),
        "galois": cert is not None,
    }
    if cert is not None:
        base = parse_expr("x^3-3*x+1")
        res = field.same_field(base, rep, args.max_den)
        out["same_field_as_x3_3x_1"] = res.same
        out["status"] = res.status
    return out


def _print_text(data, out):
    for key, value in data.items():
        if isinstance(value, dict):
            value = " ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, list):
            value = " ".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        elif value is None:
            value = "-"
        print(f"{key}: {value}", file=out)


def _print_graph_text(graph, out):
    print(f"generator: {format_rational(graph.generator)}", file=out)
    print(f"exceptional: {graph.exceptional}", file=out)
    for n in graph.nodes:
        flag = " reducible" if n.reducible else ""
        print(f"depth {n.depth} [{n.edge_from_parent}] k = {format_rational(n.k)}"
              f"  a = {format_rational(n.a)}{flag}", file=out)
    for u, v, label in graph.edges:
        print(f"edge {format_rational(u)} -{label}-> {format_rational(v)}", file=out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubicgalois",
        description="Exact analysis of cubic polynomials with cyclic Galois group.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    def poly_cmd(name, func, help_, nargs=("poly",)):
        sp = add(name, func, help_)
        for n in nargs:
            sp.add_argument(n, help="polynomial, e.g. 'x^3-3*x+1' or '1,0,-3,1'")
        sp.add_argument("--coeffs", action="store_true",
                        help="read polynomials as descending coefficient lists")
        return sp

    sp = poly_cmd("analyze", cmd_analyze, "certify, permute, couple and normalize a cubic")
    sp.add_argument("--precision", default="1/1000000000000",
                    help="width of the real-root intervals (rational, default 1/10^12)")
    sp = poly_cmd("couple", cmd_couple, "coupled cubic(s)")
    sp.add_argument("--sign", choices=["+", "-"], default=None)
    poly_cmd("rep", cmd_rep, "class representative and characteristic number")

    add("char", cmd_char, "representative from a characteristic number").add_argument("k")
    sp = add("phi", cmd_phi, "phi(k) = 27k/(2k+27)")
    sp.add_argument("k")
    sp.add_argument("--iter", type=int, default=None, help="apply phi n times")
    add("psi", cmd_psi, "psi(k) = 27k/|2k-27|").add_argument("k")
    add("generator", cmd_generator, "canonical superclass generator").add_argument("k")

    sp = add("superclass", cmd_superclass, "enumerate a superclass")
    sp.add_argument("k")
    sp.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT")

    sp = poly_cmd("samefield", cmd_samefield, "do two Galois cubics share a root field?",
                  nargs=("poly1", "poly2"))
    sp.add_argument("--max-den", type=int, default=DEFAULT_MAX_DEN)

    sp = add("family", cmd_family, "t(y) and checks on x^3 - t*x - t")
    sp.add_argument("y")
    sp.add_argument("--max-den", type=int, default=DEFAULT_MAX_DEN)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        result = args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return 2
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=err)
        return 1

    if isinstance(result, dynamics.SuperclassGraph):
        if args.dot:
            out.write(result.to_dot())
        elif args.json:
            print(result.to_json(), file=out)
        else:
            _print_graph_text(result, out)
    elif args.json:
        print(json.dumps(result, indent=2), file=out)
    else:
        _print_text(result, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
