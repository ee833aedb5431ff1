"""Command-line front end.

Subcommands: generate | analyze | member | expansion | cantor-fn |
counterexample | render. Machine output (JSON/CSV/SVG) goes to stdout,
diagnostics to stderr. Exit codes: 2 invalid family or malformed rational,
3 depth over cap, 4 --limit requested where no digit characterization exists.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import NoReturn

from .analysis import (
    base_expansion,
    cantor_function,
    dimension_estimates,
    limit_measure,
    measure_at_depth,
    member_at_depth,
    member_limit,
    membership_witness,
    similarity_dimension,
)
from .counterexample import tail_table_csv
from .exact import format_rational, parse_rational, rational_decimal
from .families import (
    DEFAULT_DEPTH_CAP,
    DepthCapError,
    DigitSet,
    FamilySpec,
    LambdaFamily,
    Power,
    Proportional,
    digit_equivalent,
    family_from_json,
    family_to_json,
    iterate,
    level_stats,
)
from .render import RenderSpec, render_svg

EXIT_BAD_FAMILY = 2
EXIT_DEPTH_CAP = 3
EXIT_NO_DIGIT_FORM = 4


def _fail(code: int, message: str) -> NoReturn:
    print(message, file=sys.stderr)
    raise SystemExit(code)


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["proportional", "power", "digit", "lambda"])
    p.add_argument("--alpha", help="middle proportion for --family proportional, as p/q")
    p.add_argument("--n", type=int, help="base for --family power or digit")
    p.add_argument("--digits", help="kept digits for --family digit, e.g. 0,2,4")
    p.add_argument("--lambda", dest="lam", help="removal scale for --family lambda, as p/q")
    p.add_argument("--family-json", help="full family spec as JSON (overrides shorthand flags)")


def _build_family(args: argparse.Namespace) -> FamilySpec:
    try:
        if args.family_json:
            return family_from_json(json.loads(args.family_json))
        if args.family == "proportional":
            if args.alpha is None:
                raise ValueError("--family proportional requires --alpha")
            return Proportional(parse_rational(args.alpha))
        if args.family == "power":
            if args.n is None:
                raise ValueError("--family power requires --n")
            return Power(args.n)
        if args.family == "digit":
            if args.n is None or args.digits is None:
                raise ValueError("--family digit requires --n and --digits")
            return DigitSet(args.n, tuple(int(d) for d in args.digits.split(",")))
        if args.family == "lambda":
            if args.lam is None:
                raise ValueError("--family lambda requires --lambda")
            return LambdaFamily(parse_rational(args.lam))
        raise ValueError("no family given (use --family or --family-json)")
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        _fail(EXIT_BAD_FAMILY, f"invalid family: {exc}")


def _parse_x(text: str) -> Fraction:
    try:
        x = parse_rational(text)
    except ValueError as exc:
        _fail(EXIT_BAD_FAMILY, str(exc))
    if not 0 <= x <= 1:
        _fail(EXIT_BAD_FAMILY, f"x must lie in [0,1], got {text}")
    return x


def _cmd_generate(args: argparse.Namespace) -> None:
    family = _build_family(args)
    try:
        stage = iterate(family, args.depth, depth_cap=args.depth_cap)
    except DepthCapError as exc:
        _fail(EXIT_DEPTH_CAP, str(exc))
    if args.format == "json":
        rows = stage.to_json()
        if args.decimal:
            for row, interval in zip(rows, stage):
                row["a_decimal"] = rational_decimal(interval.a)
                row["b_decimal"] = rational_decimal(interval.b)
        print(json.dumps(rows))
    elif args.format == "csv":
        for interval in stage:
            cells = [format_rational(interval.a), format_rational(interval.b)]
            if args.decimal:
                cells += [rational_decimal(interval.a), rational_decimal(interval.b)]
            print(",".join(cells))
    else:
        spec = RenderSpec(family=family, depth=args.depth, width_px=args.width,
                          row_height_px=args.row_height)
        sys.stdout.write(render_svg(spec, depth_cap=args.depth_cap))


def _cmd_analyze(args: argparse.Namespace) -> None:
    family = _build_family(args)
    try:
        stats = level_stats(family, args.depth)
        report = {
            "family": family_to_json(family),
            "depth": args.depth,
            "measure_at_depth": format_rational(measure_at_depth(family, args.depth)),
            "limit_measure": format_rational(limit_measure(family)),
            "level_stats": {
                "count": stats.count,
                "min_length": format_rational(stats.min_length),
                "max_length": format_rational(stats.max_length),
            },
        }
        try:
            report["similarity_dimension"] = similarity_dimension(family).to_json()
            report["dimension_estimates"] = dimension_estimates(family, args.kmax).to_json()
        except ValueError as exc:
            report["dimension_note"] = str(exc)  # power n=2 has no dimension report
        if args.decimal:
            report["measure_at_depth_decimal"] = rational_decimal(measure_at_depth(family, args.depth))
            report["limit_measure_decimal"] = rational_decimal(limit_measure(family))
    except DepthCapError as exc:
        _fail(EXIT_DEPTH_CAP, str(exc))
    print(json.dumps(report))


def _digit_form(family: FamilySpec) -> DigitSet:
    if isinstance(family, DigitSet):
        return family
    if isinstance(family, Proportional):
        equivalent = digit_equivalent(family.alpha)
        if equivalent is not None:
            return equivalent
    _fail(EXIT_NO_DIGIT_FORM, "no digit characterization exists for this family")


def _cmd_member(args: argparse.Namespace) -> None:
    family = _build_family(args)
    x = _parse_x(args.x)
    if args.limit:
        digit_family = _digit_form(family)
        verdict = member_limit(x, digit_family)
        print("true" if verdict else "false")
        if verdict:
            witness = membership_witness(x, digit_family)
            print(f"witness: {json.dumps(witness.to_json())}")
    else:
        if args.depth is None:
            _fail(EXIT_BAD_FAMILY, "member requires --depth or --limit")
        try:
            verdict = member_at_depth(x, family, args.depth)
        except DepthCapError as exc:
            _fail(EXIT_DEPTH_CAP, str(exc))
        print("true" if verdict else "false")


def _cmd_expansion(args: argparse.Namespace) -> None:
    x = _parse_x(args.x)
    record = base_expansion(x, args.base)
    obj = record.to_json()
    alternate = record.alternate_tail_form()
    if alternate is not None:
        obj["alternate_tail"] = alternate.to_json()
    print(json.dumps(obj))


def _cmd_cantor_fn(args: argparse.Namespace) -> None:
    x = _parse_x(args.x)
    try:
        value = cantor_function(x)
    except ValueError as exc:
        _fail(1, str(exc))
    print(format_rational(value))


def _cmd_counterexample(args: argparse.Namespace) -> None:
    family = _build_family(args) if (args.family or args.family_json) else Power(4)
    sys.stdout.write(tail_table_csv(family, args.n_max))


def _cmd_render(args: argparse.Namespace) -> None:
    family = _build_family(args)
    try:
        spec = RenderSpec(family=family, depth=args.depth, width_px=args.width,
                          row_height_px=args.row_height)
        sys.stdout.write(render_svg(spec, depth_cap=args.depth_cap))
    except DepthCapError as exc:
        _fail(EXIT_DEPTH_CAP, str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cantorlike",
                                     description="Exact Cantor-like set construction and analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit the stage-k interval listing")
    _add_family_args(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    p.add_argument("--depth-cap", type=int, default=DEFAULT_DEPTH_CAP)
    p.add_argument("--decimal", action="store_true", help="add 15-digit decimal columns")
    p.add_argument("--width", type=int, default=800, help="SVG width in px")
    p.add_argument("--row-height", type=int, default=28, help="SVG row height in px")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("analyze", help="measures, dimensions and level stats")
    _add_family_args(p)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--kmax", type=int, default=8, help="dilation-estimate sequence length")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("member", help="membership at a finite stage or in the limit set")
    _add_family_args(p)
    p.add_argument("--x", required=True, help="query point as p/q")
    p.add_argument("--depth", type=int)
    p.add_argument("--limit", action="store_true", help="decide limit-set membership (digit form)")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("expansion", help="eventually periodic base-n expansion of a rational")
    p.add_argument("--x", required=True)
    p.add_argument("--base", type=int, default=3)
    p.set_defaults(func=_cmd_expansion)

    p = sub.add_parser("cantor-fn", help="devil's-staircase value of a ternary-set point")
    p.add_argument("--x", required=True)
    p.set_defaults(func=_cmd_cantor_fn)

    p = sub.add_parser("counterexample", help="L1 tail table for the fat-Cantor counterexample")
    _add_family_args(p)
    p.add_argument("--n-max", type=int, default=15)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("render", help="SVG iteration diagram")
    _add_family_args(p)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--row-height", type=int, default=28)
    p.add_argument("--depth-cap", type=int, default=DEFAULT_DEPTH_CAP)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.func(args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
