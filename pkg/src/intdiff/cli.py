"""Command line interface.

Every subcommand computes a JSON-friendly ``result`` together with its text
rendering, so ``--json`` and plain output carry the same content.

Exit codes: 0 success, 1 parse error (including a malformed command line),
2 domain error or resource guard, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import ceil

from . import checks, ideals
from .action import apply
from .algebra import involution, sigma, tau
from .errors import DomainError, ParseError
from .growth import filtration_dims, growth_slope
from .quotient import project_bn
from .syntax import format_rational, parse_operator, parse_polynomial, print_bn, print_canonical
from .units import InvariantViolation, is_unit

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_INVARIANT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# JSON views ----------------------------------------------------------------------


def _atom_json(atom):
    return {"Mat": [atom.a, atom.b]} if atom.is_mat else {"Poly": [atom.a, atom.b]}


def operator_json(a):
    return {
        "text": print_canonical(a),
        "terms": [
            {"coef": format_rational(c), "monomial": [_atom_json(at) for at in m]}
            for m, c in a.sorted_terms()
        ],
    }


def polynomial_json(p):
    return {
        "text": str(p),
        "terms": [{"coef": format_rational(c), "exponents": list(k)} for k, c in sorted(p.coeffs.items())],
    }


def bn_json(u):
    return {
        "text": print_bn(u),
        "terms": [
            {"coef": format_rational(c), "hpows": list(k[0]), "shifts": list(k[1])}
            for k, c in sorted(u.terms.items())
        ],
    }


def ideal_json(a):
    return {"literal": ideals.to_literal(a), "antichain": [list(f) for f in a.vectors()]}


def _labels(labels):
    return sorted(labels, key=lambda s: (len(s), sorted(s)))


# commands ------------------------------------------------------------------------


def cmd_norm(args):
    a = parse_operator(args.n, args.expr)
    return print_canonical(a), operator_json(a)


def cmd_apply(args):
    a = parse_operator(args.n, args.expr)
    p = apply(a, parse_polynomial(args.n, args.poly))
    return str(p), polynomial_json(p)


def cmd_star(args):
    a = involution(parse_operator(args.n, args.expr))
    return print_canonical(a), operator_json(a)


def _check_coordinate(args):
    if not 1 <= args.index <= args.n:
        raise DomainError(f"coordinate {args.index} out of range 1..{args.n}")


def cmd_sigma(args):
    _check_coordinate(args)
    a = sigma(args.index, parse_operator(args.n, args.expr))
    return print_canonical(a), operator_json(a)


def cmd_tau(args):
    _check_coordinate(args)
    a = tau(args.index, parse_operator(args.n, args.expr))
    return print_canonical(a), operator_json(a)


def cmd_proj_bn(args):
    u = project_bn(parse_operator(args.n, args.expr))
    return print_bn(u), bn_json(u)


def cmd_unit(args):
    decision = is_unit(parse_operator(args.n, args.expr))
    result = {"status": decision.status}
    text = decision.status
    if decision.inverse is not None:
        result["inverse"] = operator_json(decision.inverse)
        text += "\n" + print_canonical(decision.inverse)
    return text, result


def cmd_ideal(args):
    n = args.n
    lit = lambda s: ideals.from_literal(n, s)  # noqa: E731
    op = args.op
    if op in ("sum", "prod", "cap"):
        fn = {"sum": ideals.ideal_sum, "prod": ideals.ideal_product, "cap": ideals.ideal_intersect}[op]
        c = fn(lit(args.a), lit(args.b))
        return ideals.to_literal(c), ideal_json(c)
    if op == "contains":
        ok = ideals.contains(lit(args.a), lit(args.b))
        return str(ok).lower(), ok
    if op == "isprime":
        label = ideals.is_prime(lit(args.a))
        if label is None:
            return "no", None
        return ideals.label_str(label), sorted(label)
    if op in ("minprimes", "factor"):
        a = lit(args.a)
        labels = _labels(ideals.minimal_primes(a))
        if op == "factor":
            parts = [ideals.prime_from_subset(n, s) for s in labels]
            if ideals.product_of(parts, n) != a:
                raise InvariantViolation("product of minimal primes does not reconstruct the ideal")
        return " ".join(ideals.label_str(s) for s in labels), [sorted(s) for s in labels]
    if op == "member":
        ok = ideals.membership(parse_operator(n, args.b), lit(args.a))
        return str(ok).lower(), ok
    raise DomainError(f"unknown ideal operation {op}")


def cmd_dedekind(args):
    count = len(ideals.enumerate_ideals(args.n))
    lo, hi = ideals.dedekind_bounds(args.n)
    if not lo <= count <= hi:
        raise InvariantViolation(f"count {count} outside [{lo}, {hi}]")
    return str(count), {"count": count, "lower_bound": lo, "upper_bound": hi}


def cmd_spec(args):
    if args.n < 1:
        raise DomainError("arity must be positive")
    labels = _labels(ideals.all_primes(args.n))
    rows = [(ideals.label_str(s), ideals.height(s), ideals.to_literal(ideals.prime_from_subset(args.n, s))) for s in labels]
    text = "\n".join(f"{lab} height {h} {lit}" for lab, h, lit in rows)
    return text, [{"prime": sorted(s), "height": h, "literal": lit} for s, (_, h, lit) in zip(labels, rows)]


def cmd_chains(args):
    p, q = ideals.parse_label(args.n, args.p), ideals.parse_label(args.n, args.q)
    h, chains = ideals.height_and_chains(p, q)
    lines = [f"height {h}"] + [" < ".join(ideals.label_str(s) for s in ch) for ch in chains]
    return "\n".join(lines), {"height": h, "chains": [[sorted(s) for s in ch] for ch in chains]}


def cmd_gk(args):
    dims = filtration_dims(args.n, args.imax)
    result = {"dims": dims, "slope": None, "window": None}
    text = "dims " + " ".join(map(str, dims))
    if args.imax >= 2:
        lo = max(1, ceil(args.imax / 2))
        slope = growth_slope(dims, lo, args.imax)
        result.update(slope=round(slope, 6), window=[lo, args.imax])
        text += f"\nslope[{lo}..{args.imax}] {slope:.4f}"
    return text, result


def _report(results):
    text = "\n".join(f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in results)
    payload = [{"name": name, "ok": ok} for name, ok in results]
    if not all(ok for _, ok in results):
        raise InvariantViolation(text)
    return text, payload


def cmd_check_relations(args):
    if args.n < 1:
        raise DomainError("arity must be positive")
    return _report(checks.check_relations(args.n))


def cmd_selftest(args):
    return _report(checks.selftest())


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser = _Parser(prog="intdiff", description="Integro-differential operator algebra toolkit.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    def arity(p):
        p.add_argument("-n", type=int, required=True, help="number of variables")

    p = add("norm", cmd_norm, "canonical form of an expression")
    arity(p)
    p.add_argument("expr")
    p = add("apply", cmd_apply, "apply an operator to a polynomial")
    arity(p)
    p.add_argument("expr")
    p.add_argument("poly")
    p = add("star", cmd_star, "involution")
    arity(p)
    p.add_argument("expr")
    for name, func in (("sigma", cmd_sigma), ("tau", cmd_tau)):
        p = add(name, func, f"{name}_i of an expression")
        arity(p)
        p.add_argument("-i", "--index", type=int, default=1)
        p.add_argument("expr")
    p = add("proj-bn", cmd_proj_bn, "image in the quotient B_n")
    arity(p)
    p.add_argument("expr")
    p = add("unit", cmd_unit, "decide whether an operator is a unit")
    arity(p)
    p.add_argument("expr")

    p = add("ideal", cmd_ideal, "ideal lattice operations on antichain literals")
    arity(p)
    isub = p.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for op in ("sum", "prod", "cap", "contains"):
        q = isub.add_parser(op, parents=[common])
        q.add_argument("a")
        q.add_argument("b")
    for op in ("isprime", "minprimes", "factor"):
        isub.add_parser(op, parents=[common]).add_argument("a")
    q = isub.add_parser("member", parents=[common], help="is an operator in the ideal")
    q.add_argument("a", help="antichain literal")
    q.add_argument("b", metavar="expr")

    for name, func, help_ in (
        ("dedekind", cmd_dedekind, "number of ideals of I_n"),
        ("spec", cmd_spec, "prime ideals with heights"),
        ("check-relations", cmd_check_relations, "normalize every defining relation"),
    ):
        add(name, func, help_).add_argument("n", type=int)
    p = add("chains", cmd_chains, "maximal chains of primes between two labels")
    p.add_argument("n", type=int)
    p.add_argument("p")
    p.add_argument("q")
    p = add("gk", cmd_gk, "dimensions of the standard filtration and growth slope")
    p.add_argument("n", type=int)
    p.add_argument("imax", type=int)
    add("selftest", cmd_selftest, "quick internal consistency battery")
    return parser


def _inputs(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_PARSE
    command = args.command + (f" {args.op}" if getattr(args, "op", None) else "")
    header = {"command": command, "input": _inputs(args)}
    try:
        text, result = args.func(args)
    except ParseError as exc:
        code, kind, msg = EXIT_PARSE, "parse", str(exc)
    except DomainError as exc:
        code, kind, msg = EXIT_DOMAIN, "domain", str(exc)
    except InvariantViolation as exc:
        code, kind, msg = EXIT_INVARIANT, "invariant", str(exc)
    else:
        if want_json:
            _emit({**header, "result": result}, out)
        else:
            out.write(text + "\n")
        return EXIT_OK
    if want_json:
        _emit({**header, "error": {"kind": kind, "message": msg}}, out)
    err.write(f"{kind} error: {msg}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
