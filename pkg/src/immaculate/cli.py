"""Command line interface.

Shapes are comma-separated integers (negatives allowed), e.g. `3,1,3` or
`-1,3,2`. Skew inner shapes go through `--skew`. Output format comes from
`--format` or the IMMACULATE_FORMAT environment variable (text, json, or
latex; default text).

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .coverings import DEFAULT_MAX_K, enumerate_coverings
from .diagram import build_diagram, render
from .expansions import (
    immaculate_to_H,
    monomial_to_dual_immaculate,
    skew_immaculate_to_H,
    skew_prefix_decomposition,
    straighten_skew,
)
from .expr import BasisExpr
from .ribbon import (
    H_to_ribbon,
    im2rib_class,
    immaculate_to_ribbon_direct,
    ribbon_product,
    ribbon_to_H,
)
from .verify import CHECKS, run_suite

USAGE_ERROR = 1
VERIFY_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _parse_shape(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"shape must be comma-separated integers, got {text!r}"
        )


def _default_format() -> str:
    fmt = os.environ.get("IMMACULATE_FORMAT", "text")
    return fmt if fmt in ("text", "json", "latex") else "text"


def _emit(expr: BasisExpr, fmt: str, tag: Optional[str] = None) -> None:
    if fmt == "json":
        payload = expr.to_json_dict()
        if tag:
            payload["tag"] = tag
        print(json.dumps(payload))
        return
    if tag:
        print(f"[{tag}]")
    print(expr.to_latex() if fmt == "latex" else expr.to_text())


def build_parser() -> _Parser:
    parser = _Parser(prog="immaculate", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, skew=True):
        p.add_argument("--shape", type=_parse_shape, required=True)
        if skew:
            p.add_argument("--skew", type=_parse_shape, default=None)
        p.add_argument("--format", choices=("text", "json", "latex"),
                       default=_default_format())
        p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)

    expand = sub.add_parser("expand", help="expand a basis element")
    expand_sub = expand.add_subparsers(dest="what", required=True)

    p = expand_sub.add_parser("immaculate", help="immaculate element into H or R")
    add_common(p)
    p.add_argument("--basis", choices=("H", "R"), default="H")
    p.add_argument("--force", action="store_true",
                   help="evaluate the direct ribbon formula outside its "
                        "proven class (output tagged UNPROVEN-CLASS)")

    p = expand_sub.add_parser("monomial",
                              help="monomial element into the dual basis")
    add_common(p, skew=False)

    p = expand_sub.add_parser("ribbon-product",
                              help="product of two ribbon elements")
    p.add_argument("--shape", type=_parse_shape, required=True)
    p.add_argument("--times", type=_parse_shape, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default=_default_format())

    p = sub.add_parser("convert", help="convert a single H or R element")
    p.add_argument("--from", dest="src", choices=("H", "R"), required=True)
    p.add_argument("--to", dest="dst", choices=("H", "R"), required=True)
    p.add_argument("--shape", type=_parse_shape, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default=_default_format())

    p = sub.add_parser("straighten",
                       help="normalize a skew inner shape to a partition")
    p.add_argument("--shape", type=_parse_shape, required=True)
    p.add_argument("--skew", type=_parse_shape, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default=_default_format())

    p = sub.add_parser("decompose",
                       help="split off the bottom rows as H-prefixes")
    add_common(p, skew=False)
    p.add_argument("--prefix", type=int, required=True, metavar="M")

    thc = sub.add_parser("thc", help="tunnel hook coverings and diagrams")
    thc_sub = thc.add_subparsers(dest="what", required=True)
    p = thc_sub.add_parser("list", help="list all coverings of a shape")
    add_common(p)
    p = thc_sub.add_parser("render", help="draw a diagram, optionally with "
                                          "one covering overlaid")
    add_common(p)
    p.add_argument("--sigma", type=_parse_shape, default=None,
                   help="overlay the covering of this permutation (nu = 0 only)")

    p = sub.add_parser("verify", help="run self-check sweeps")
    p.add_argument("--suite", default="all",
                   help="'all' or a comma-separated subset of: "
                        + ", ".join(CHECKS))
    p.add_argument("--n", type=int, default=None,
                   help="size cap for the sweeps that take one")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_expand_immaculate(args) -> int:
    if args.basis == "H":
        expr = skew_immaculate_to_H(args.shape, args.skew, max_k=args.max_k)
        _emit(expr, args.format)
        return 0
    if args.skew:
        print("error: ribbon expansion is only available for straight shapes",
              file=sys.stderr)
        return USAGE_ERROR
    if any(a < 1 for a in args.shape):
        print("error: ribbon expansion needs a strong composition",
              file=sys.stderr)
        return USAGE_ERROR
    outside = im2rib_class(args.shape) is None
    if outside and not args.force:
        print(f"error: {args.shape} is outside the proven class for the "
              f"direct ribbon formula; pass --force to evaluate it anyway",
              file=sys.stderr)
        return USAGE_ERROR
    expr = immaculate_to_ribbon_direct(args.shape, force=args.force)
    _emit(expr, args.format, tag="UNPROVEN-CLASS" if outside else None)
    return 0


def _cmd_expand_monomial(args) -> int:
    expr = monomial_to_dual_immaculate(args.shape, max_k=args.max_k)
    _emit(expr, args.format)
    return 0


def _cmd_expand_ribbon_product(args) -> int:
    _emit(ribbon_product(args.shape, args.times), args.format)
    return 0


def _cmd_convert(args) -> int:
    if args.src == args.dst:
        print("error: --from and --to must differ", file=sys.stderr)
        return USAGE_ERROR
    term = BasisExpr.term(args.src, args.shape)
    expr = H_to_ribbon(term) if args.src == "H" else ribbon_to_H(term)
    _emit(expr, args.format)
    return 0


def _cmd_straighten(args) -> int:
    sign, mu, nu = straighten_skew(args.shape, args.skew)
    if args.format == "json":
        print(json.dumps({"sign": sign, "mu": list(mu), "nu": list(nu)}))
    else:
        shape = f"{','.join(map(str, mu))} / {','.join(map(str, nu))}"
        print(f"sign {sign:+d}" if sign else "sign 0 (element vanishes)")
        print(f"shape {shape}")
    return 0


def _cmd_decompose(args) -> int:
    try:
        entries = skew_prefix_decomposition(args.shape, args.prefix,
                                            max_k=args.max_k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "json":
        print(json.dumps([
            {"sign": sign, "prefix": list(prefix),
             "tail_mu": list(tail_mu), "tail_nu": list(tail_nu)}
            for sign, prefix, (tail_mu, tail_nu) in entries
        ]))
        return 0
    for sign, prefix, (tail_mu, tail_nu) in entries:
        token = "+" if sign > 0 else "-"
        prefix_str = ",".join(map(str, prefix))
        mu_str = ",".join(map(str, tail_mu))
        nu_str = ",".join(map(str, tail_nu))
        print(f"{token} H({prefix_str}) * I[({mu_str})/({nu_str})]")
    return 0


def _cmd_thc_list(args) -> int:
    for covering in enumerate_coverings(args.shape, args.skew,
                                        max_k=args.max_k):
        if args.format == "json":
            print(json.dumps(covering.to_json_dict()))
        else:
            cells = " ".join(f"({p},{q})" for p, q in covering.terminal_cells)
            sign = "+" if covering.total_sign > 0 else "-"
            delta = ",".join(map(str, covering.delta_seq))
            print(f"{sign} delta=({delta}) terminals: {cells}")
    return 0


def _cmd_thc_render(args) -> int:
    diagram = build_diagram(args.shape, args.skew)
    overlay = None
    if args.sigma is not None:
        from .coverings import covering_from_permutation

        if args.skew and any(args.skew):
            print("error: --sigma requires an empty inner shape",
                  file=sys.stderr)
            return USAGE_ERROR
        overlay = list(covering_from_permutation(args.shape, args.sigma,
                                                 max_k=args.max_k).hooks)
    fmt = "latex" if args.format == "latex" else "ascii"
    print(render(diagram, overlay, fmt))
    return 0


def _cmd_verify(args) -> int:
    names = None if args.suite == "all" else args.suite.split(",")
    overrides = {"seed": args.seed}
    if args.n is not None:
        overrides.update(max_n=args.n, comp_n=args.n)
    try:
        reports = run_suite(names, **overrides)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    ok = True
    for report in reports:
        status = "pass" if report["pass"] else "FAIL"
        print(f"{report['check']:<20} {status}  {report['detail']}")
        ok = ok and report["pass"]
    return 0 if ok else VERIFY_FAILURE


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        if args.command == "expand":
            if args.what == "immaculate":
                return _cmd_expand_immaculate(args)
            if args.what == "monomial":
                return _cmd_expand_monomial(args)
            return _cmd_expand_ribbon_product(args)
        if args.command == "convert":
            return _cmd_convert(args)
        if args.command == "straighten":
            return _cmd_straighten(args)
        if args.command == "decompose":
            return _cmd_decompose(args)
        if args.command == "thc":
            if args.what == "list":
                return _cmd_thc_list(args)
            return _cmd_thc_render(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
