"""Command-line surface for scripted exploration and regression runs.

Exit codes: 0 on success, 1 when a verification subcommand finds a
counterexample (the counterexamples are printed as JSON), 2 on parse errors
(with the offending position).  Output is deterministic for a fixed
invocation; verification reports are JSON with sorted keys.
"""

import argparse
import json
import sys

from . import export, literals, oracle
from .bridge import verify_isomorphism
from .germs import germ_compose, germ_eq, germ_inverse, NotComposable
from .semigroup import check_relations, generator, mul_t, star_t, telement
from .spectrum import (
    TightCharacter,
    filter_of,
    index_grid,
    tight_char_value,
)
from .triples import compose as triple_compose
from .triples import NotComposable as TripleNotComposable


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _cmd_mul(args) -> int:
    a = literals.parse_element(args.left, ell=args.ell)
    b = literals.parse_element(args.right, ell=args.ell)
    print(literals.format_element(mul_t(a, b)))
    return 0


def _cmd_star(args) -> int:
    a = literals.parse_element(args.element, ell=args.ell)
    print(literals.format_element(star_t(a)))
    return 0


def _cmd_canon(args) -> int:
    a = literals.parse_element(args.element, ell=args.ell)
    print(literals.format_element(a))
    return 0


def _cmd_char_eval(args) -> int:
    k = literals.parse_index(args.index)
    e = literals.parse_element(args.element, ell=len(k))
    print(tight_char_value(k, e))
    return 0


def _cmd_spectrum(args) -> int:
    out = []
    for k in index_grid(args.ell, args.bound):
        x = TightCharacter(k)
        support = filter_of(x, args.ell, args.bound)
        out.append(
            {
                "index": literals.index_to_json(k),
                "filter": [literals.format_element(e) for e in support],
            }
        )
    _print_json(out)
    return 0


def _cmd_germ_compose(args) -> int:
    g = literals.parse_germ(args.left, ell=args.ell)
    h = literals.parse_germ(args.right, ell=args.ell)
    try:
        print(literals.format_germ(germ_compose(g, h)))
    except NotComposable:
        print("not composable", file=sys.stderr)
        return 1
    return 0


def _cmd_germ_eq(args) -> int:
    g = literals.parse_germ(args.left, ell=args.ell)
    h = literals.parse_germ(args.right, ell=args.ell)
    print("true" if germ_eq(g, h) else "false")
    return 0


def _cmd_germ_inverse(args) -> int:
    g = literals.parse_germ(args.germ, ell=args.ell)
    print(literals.format_germ(germ_inverse(g)))
    return 0


def _cmd_sheu_compose(args) -> int:
    a = literals.parse_triple(args.left)
    b = literals.parse_triple(args.right)
    try:
        print(literals.format_triple(triple_compose(a, b)))
    except TripleNotComposable:
        print("not composable", file=sys.stderr)
        return 1
    return 0


def _cmd_iso_check(args) -> int:
    bz, bx, bw = args.bounds
    report = verify_isomorphism(args.ell, bz, bx, bw)
    _print_json(report)
    return 0 if report["ok"] else 1


def _cmd_check_relations(args) -> int:
    report = check_relations(args.ell, args.bound)
    _print_json(report)
    ok = report["overlap"]["consistent_reading_confirmed"]
    return 0 if ok else 1


def _cmd_oracle_verify(args) -> int:
    spec = oracle.TruncationSpec(args.ell, args.trunc_n, args.trunc_z, args.q)
    checked = failed = 0
    max_residual = 0.0
    details = []
    suites = (
        ["products", "relations", "representation"]
        if args.suite == "all"
        else [args.suite]
    )
    if "products" in suites:
        from .semigroup import enumerate_elements

        elems = list(enumerate_elements(args.ell, args.bound, args.bound))
        for a in elems:
            for b in elems:
                result = oracle.compare_symbolic_numeric(a, b, spec)
                checked += 1
                if not result["equal"]:
                    failed += 1
                max_residual = max(max_residual, result["residual"])
        details.append({"suite": "products", "pairs": checked})
    if "relations" in suites:
        rep = oracle.sphere_relations_check(spec, tol=args.tol)
        checked += rep["checked"]
        failed += rep["failed"]
        max_residual = max(max_residual, rep["max_residual"])
        details.append({"suite": "relations", "relations": rep["relations"]})
    if "representation" in suites:
        for k in range(1, args.ell + 2):
            zk_star = star_t(generator(args.ell, k))
            lhs = oracle.regular_representation(zk_star, spec)
            rhs = oracle.element_operator(zk_star, spec)
            res = lhs.residual_against(rhs)
            checked += 1
            if res != 0.0:
                failed += 1
            max_residual = max(max_residual, res)
        details.append({"suite": "representation", "generators": args.ell + 1})
    _print_json(
        {
            "checked": checked,
            "failed": failed,
            "maxResidual": max_residual,
            "details": details,
        }
    )
    return 0 if failed == 0 else 1


def _cmd_export_groupoid(args) -> int:
    bounds = args.bounds
    if len(bounds) == 1:
        snap = export.germ_groupoid_snapshot(args.ell, bounds[0])
    elif len(bounds) == 3:
        snap = export.triple_groupoid_snapshot(args.ell, *bounds)
    else:
        print("--bounds takes one value (germs) or three (triples)", file=sys.stderr)
        return 2
    if args.format == "dot":
        sys.stdout.write(export.snapshot_to_dot(snap))
    else:
        print(export.snapshot_to_json(snap))
    return 0


def _bounds_triple(text: str):
    parts = [int(v) for v in text.split(",")]
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddsphere",
        description="inverse-semigroup, groupoid and truncated-operator toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--ell", type=int, default=None, help="tensor length")
        return p

    p = add("mul", _cmd_mul, help="multiply two element literals")
    p.add_argument("left")
    p.add_argument("right")

    p = add("star", _cmd_star, help="involution of an element literal")
    p.add_argument("element")

    p = add("canon", _cmd_canon, help="canonical form of an element literal")
    p.add_argument("element")

    p = add("char-eval", _cmd_char_eval, help="evaluate a tight character")
    p.add_argument("index")
    p.add_argument("element")

    p = add("spectrum", _cmd_spectrum, help="tight characters and filters at a bound")
    p.add_argument("--bound", type=int, required=True)

    p = add("germ-compose", _cmd_germ_compose, help="compose two germs")
    p.add_argument("left")
    p.add_argument("right")

    p = add("germ-eq", _cmd_germ_eq, help="test germ equality")
    p.add_argument("left")
    p.add_argument("right")

    p = add("germ-inverse", _cmd_germ_inverse, help="invert a germ")
    p.add_argument("germ")

    p = add("sheu-compose", _cmd_sheu_compose, help="compose two triples")
    p.add_argument("left")
    p.add_argument("right")

    p = add("iso-check", _cmd_iso_check, help="verify the groupoid isomorphism")
    p.add_argument("--bounds", type=_bounds_triple, default=[2, 2, 2])

    p = add("check-relations", _cmd_check_relations, help="audit the product rules")
    p.add_argument("--bound", type=int, default=2)

    p = add("oracle-verify", _cmd_oracle_verify, help="run numeric cross-checks")
    p.add_argument(
        "--suite",
        choices=["products", "relations", "representation", "all"],
        default="all",
    )
    p.add_argument("--trunc-n", type=int, default=8)
    p.add_argument("--trunc-z", type=int, default=8)
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--bound", type=int, default=1, help="index bound for products")
    p.add_argument("--tol", type=float, default=1e-10)

    p = add("export-groupoid", _cmd_export_groupoid, help="emit JSON or DOT")
    p.add_argument("--bounds", type=_bounds_triple, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in {
        "spectrum",
        "iso-check",
        "check-relations",
        "oracle-verify",
        "export-groupoid",
    } and args.ell is None:
        parser.error(f"{args.command} requires --ell")
    try:
        return args.fn(args)
    except literals.ParseError as exc:
        print(f"parse error {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
