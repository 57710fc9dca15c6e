"""Command-line entry point.

    flagbott info A2
    flagbott weyl B2 [--word s1*s2 --weight 1,0]
    flagbott bott A2 -2,1
    flagbott degree A2 -2,1 3,1 [--oracle]
    flagbott degree A2 --line-bundle -2,1 --polarization 3,1
    flagbott construct A2 [--lambda0 0,0] [--reflection 1] [--max-n 32]

Every subcommand takes ``--json``.  Exit codes: 0 success, 2 invalid input,
3 polarization search exhausted, 4 internal integrality violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings

from .cohomology import bott
from .construct import DEFAULT_MAX_COORD, construct_counterexample
from .errors import FlagBottError, InvalidWeight, SearchExhausted
from .intersection import chevalley_top_intersection, degree, is_very_ample
from .rootsystem import parse_group, parse_weight
from .weyl import act, dot, element_from_word, enumerate_weyl, parse_word, weyl_order

# "-2,1" would otherwise be read as an option flag
_WEIGHT_ARG = re.compile(r"^-\d+(,-?\d+)*$")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_info(args) -> int:
    rs = parse_group(args.group)
    order = weyl_order(rs)
    roots = [list(r.simple_expansion) for r in rs.positive_roots]
    payload = {
        "group": rs.name,
        "rank": rs.rank,
        "dim": rs.d,
        "cartan": [list(row) for row in rs.cartan],
        "positive_roots": roots,
        "rho": rs.rho().to_list(),
        "weyl_order": order,
    }
    lines = [
        f"group      {rs.name}",
        f"rank       {rs.rank}",
        f"d          {rs.d}  (dim G/B, number of positive roots)",
        "cartan     " + "\n           ".join(" ".join(f"{c:2d}" for c in row) for row in rs.cartan),
        f"rho        {rs.rho()}",
        f"|W|        {order}",
        "positive roots (simple-root coordinates):",
    ]
    lines += [f"  {tuple(r)}" for r in roots]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_weyl(args) -> int:
    rs = parse_group(args.group)
    if args.word is not None or args.weight is not None:
        if args.word is None or args.weight is None:
            raise InvalidWeight("--word and --weight must be given together")
        w = element_from_word(rs, parse_word(args.word, rs))
        lam = parse_weight(args.weight, rs)
        linear, shifted = act(rs, w, lam), dot(rs, w, lam)
        payload = {
            "group": rs.name,
            "word": str(w),
            "length": w.length,
            "weight": lam.to_list(),
            "act": linear.to_list(),
            "dot": shifted.to_list(),
        }
        text = f"w = {w}  (length {w.length})\nw(lam)   = {linear}\nw.lam    = {shifted}"
        _emit(args, payload, text)
        return 0
    elements = enumerate_weyl(rs, args.max_size)
    payload = {
        "group": rs.name,
        "order": len(elements),
        "elements": [
            {"word": str(w), "length": w.length, "rho_image": list(w.rho_image)} for w in elements
        ],
    }
    lines = [f"|W({rs.name})| = {len(elements)}"]
    lines += [f"  {w.length:3d}  {str(w):<30} w(rho) = {tuple(w.rho_image)}" for w in elements]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_bott(args) -> int:
    rs = parse_group(args.group)
    lam = parse_weight(args.weight, rs)
    result = bott(rs, lam)
    payload = {"group": rs.name, "weight": lam.to_list(), **result.to_dict()}
    _emit(args, payload, result.render(lam))
    return 0


def cmd_degree(args) -> int:
    rs = parse_group(args.group)
    L_text = args.line_bundle or args.L
    H_text = args.polarization or args.H
    if L_text is None or H_text is None:
        raise InvalidWeight("degree needs a line bundle and a polarization")
    L, H = parse_weight(L_text, rs), parse_weight(H_text, rs)
    value = degree(rs, L, H)
    payload = {
        "group": rs.name,
        "L": L.to_list(),
        "H": H.to_list(),
        "degree": value,
        "H_very_ample": is_very_ample(rs, H),
    }
    text = str(value)
    if args.oracle:
        check = chevalley_top_intersection(rs, [L] + [H] * (rs.d - 1))
        payload["oracle"] = check
        text = f"polynomial: {value}\nchevalley:  {check}"
        if check != value:
            print(f"oracle mismatch: {value} != {check}", file=sys.stderr)
            _emit(args, payload, text)
            return 4
    _emit(args, payload, text)
    return 0


def cmd_construct(args) -> int:
    rs = parse_group(args.group)
    lam0 = parse_weight(args.lambda0, rs) if args.lambda0 is not None else None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            cert = construct_counterexample(rs, lam0, args.reflection, args.max_n, strict=args.strict)
        except SearchExhausted as exc:
            if args.json:
                print(json.dumps({
                    "error": "SearchExhausted",
                    "best_H": exc.best_H.to_list() if exc.best_H else None,
                    "best_degree": exc.best_degree,
                }, indent=2))
            raise
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.json:
        print(cert.to_json())
    else:
        print(cert.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagbott",
        description="Borel-Weil-Bott cohomology and intersection numbers on G/B.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("group", help="simple type, e.g. A2, B3, G2")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "root system data")

    p = add("weyl", cmd_weyl, "enumerate the Weyl group, or apply one element")
    p.add_argument("--max-size", type=int, default=10**6)
    p.add_argument("--word", help="element such as s1*s2; rightmost acts first")
    p.add_argument("--weight", help="weight to act on, e.g. 1,0")

    p = add("bott", cmd_bott, "cohomology of L(weight) in characteristic zero")
    p.add_argument("weight", help="comma-separated fundamental coordinates")

    p = add("degree", cmd_degree, "L . H^(d-1)")
    p.add_argument("L", nargs="?")
    p.add_argument("H", nargs="?")
    p.add_argument("--line-bundle")
    p.add_argument("--polarization")
    p.add_argument("--oracle", action="store_true", help="also run the Chevalley-formula check")

    p = add("construct", cmd_construct, "build a certificate for the rank-2 example")
    p.add_argument("--lambda0", help="dominant seed weight (default 0)")
    p.add_argument("--reflection", type=int, default=1, help="simple reflection index")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_COORD, help="polarization search box")
    p.add_argument("--strict", action="store_true", help="fail on zero coordinates in L")

    for p in [parser, *sub.choices.values()]:
        p._negative_number_matcher = _WEIGHT_ARG
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FlagBottError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
