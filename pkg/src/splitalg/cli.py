"""Command-line interface.

Subcommands: dims, op, coproduct, antipode, primitives, check, series,
selftest.  Output is deterministic plain text; exit codes are 0 for
success, 1 for failed check verdicts, 2 for usage or parse errors, and 3
for undefined unit-on-unit products.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .acceptance import run_all
from .freealg import (
    Family,
    UndefinedProductError,
    enumerate_basis,
    format_element,
    parse_element,
    product,
)
from .hopf import antipode, coproduct, format_tensor, primitive_basis
from .presentations import (
    BUILTIN_NAMES,
    builtin_presentation,
    check_coherence,
    check_compatibility,
    compatible_space,
    parse_presentation,
    star_is_associative,
)
from .series import (
    CONJECTURAL_SERIES,
    NAMED_SERIES,
    PowerSeries,
    _poly_mul,
    alternating_integer_check,
    comp_inverse,
    parse_rational_function,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNDEFINED = 3


def _family(args) -> Family:
    return Family.from_id(args.family)


def cmd_dims(args) -> int:
    family = _family(args)
    for degree in range(1, args.degree + 1):
        count = len(enumerate_basis(family, degree, args.generators))
        print(f"{degree} {count}")
    return EXIT_OK


def cmd_op(args) -> int:
    family = _family(args)
    lhs = parse_element(args.lhs, family)
    rhs = parse_element(args.rhs, family)
    print(format_element(product(args.op, lhs, rhs)))
    return EXIT_OK


def cmd_coproduct(args) -> int:
    family = _family(args)
    element = parse_element(args.tree, family)
    print(format_tensor(coproduct(element), ascii_mode=args.ascii))
    return EXIT_OK


def cmd_antipode(args) -> int:
    family = _family(args)
    element = parse_element(args.tree, family)
    print(format_element(antipode(element)))
    return EXIT_OK


def cmd_primitives(args) -> int:
    family = _family(args)
    basis = primitive_basis(family, args.degree, args.generators)
    print(f"dim {len(basis)}")
    for element in basis:
        print(format_element(element))
    return EXIT_OK


def cmd_check(args) -> int:
    if (args.target is None) == (args.presentation is None):
        print("check: give a builtin name or a --presentation file", file=sys.stderr)
        return EXIT_USAGE
    if args.presentation is not None:
        text = Path(args.presentation).read_text(encoding="utf-8")
        presentation = parse_presentation(text)
        print(f"presentation: {args.presentation}")
    elif args.target in BUILTIN_NAMES:
        presentation = builtin_presentation(args.target)
        print(f"presentation: {args.target} (builtin)")
    else:
        path = Path(args.target)
        if not path.is_file():
            print(
                f"check: {args.target!r} is neither a builtin "
                f"({', '.join(BUILTIN_NAMES)}) nor a file",
                file=sys.stderr,
            )
            return EXIT_USAGE
        presentation = parse_presentation(path.read_text(encoding="utf-8"))
        print(f"presentation: {args.target}")

    compat = check_compatibility(presentation)
    print(f"compatibility: {compat}")
    all_ok = compat.passed
    if presentation.star is None:
        print("star: none declared; star-associativity and coherence skipped")
    else:
        star_ok = star_is_associative(presentation)
        print(f"star-associativity: {'pass' if star_ok else 'fail'}")
        coherence = check_coherence(presentation)
        print(f"coherence: {coherence}")
        all_ok = all_ok and star_ok and coherence.passed
    space = compatible_space(
        presentation.k, presentation.unit_alpha, presentation.unit_beta
    )
    print(f"compatible-space dimension: {len(space)}")
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def _parse_series_spec(text: str, order: int) -> PowerSeries:
    stripped = text.strip()
    if any(ch.isalpha() or ch in "()^*" for ch in stripped):
        return parse_rational_function(stripped).expand(order)
    coeffs = []
    for chunk in stripped.replace(",", " ").split():
        try:
            coeffs.append(Fraction(chunk))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad coefficient {chunk!r}") from None
    if not coeffs:
        raise ValueError("empty series specification")
    return PowerSeries.from_coefficients(coeffs, order)


def _conjectural(text: str) -> bool:
    stripped = text.strip()
    if not any(ch.isalpha() for ch in stripped):
        return False
    candidate = parse_rational_function(stripped)
    for name in CONJECTURAL_SERIES:
        reference = parse_rational_function(NAMED_SERIES[name])
        if _poly_mul(candidate.numer, reference.denom) == _poly_mul(
            reference.numer, candidate.denom
        ):
            return True
    return False


def cmd_series(args) -> int:
    f = _parse_series_spec(args.spec, args.order)
    print(f"series: {f}")
    if args.action == "check-alternating":
        ok = not f.coefficients[0] and alternating_integer_check(f)
        print(f"alternating integer coefficients: {'pass' if ok else 'fail'}")
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    inverse = comp_inverse(f)
    print(f"inverse: {inverse}")
    if alternating_integer_check(inverse):
        dims = " ".join(
            str(abs(int(c))) for c in inverse.coefficients[1:]
        )
        print(f"dims: {dims}")
    else:
        print("dims: inverse is not alternating with integer coefficients")
    if _conjectural(args.spec):
        print("note: dimensions conjectural")
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_all()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"selftest: {len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitalg",
        description=(
            "Exact computer algebra for associativity-splitting operations: "
            "free algebras on trees and words, their Hopf structure, "
            "presentation checkers and generating series."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument(
            "--family",
            required=True,
            help="one of dend, tridend, 2as, zinbiel, as, mag",
        )

    p = sub.add_parser("dims", help="basis counts per degree")
    add_family(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--generators", type=int, default=1)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("op", help="product of two basis elements")
    p.add_argument("op", help="operation name, e.g. prec, succ, dot, star")
    p.add_argument("lhs")
    p.add_argument("rhs")
    add_family(p)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("coproduct", help="coproduct of a basis element")
    p.add_argument("tree")
    add_family(p)
    p.add_argument("--ascii", action="store_true", help="render the tensor sign as (x)")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", help="antipode of a basis element")
    p.add_argument("tree")
    add_family(p)
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("primitives", help="basis of primitive elements in one degree")
    add_family(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--generators", type=int, default=1)
    p.set_defaults(func=cmd_primitives)

    p = sub.add_parser("check", help="compatibility/coherence report for a presentation")
    p.add_argument("target", nargs="?", help="builtin name or file path")
    p.add_argument("--presentation", help="presentation file path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("series", help="invert or screen a generating series")
    p.add_argument("action", choices=("invert", "check-alternating"))
    p.add_argument("spec", help="rational function in x, or coefficient list")
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("selftest", help="run the acceptance checklist")
    p.set_defaults(func=cmd_selftest)

    return parser


_SERIES_ACTIONS = ("invert", "check-alternating")


def _shield_series_spec(argv: list[str]) -> list[str]:
    """Keep argparse from reading a leading-minus series spec as a flag.

    After the series action keyword, the next bare token is the spec; a
    leading space neutralizes its dash and is stripped during parsing.
    """
    if not argv or argv[0] != "series":
        return argv
    out = list(argv)
    for i, token in enumerate(out[:-1]):
        if token in _SERIES_ACTIONS:
            nxt = out[i + 1]
            if nxt.startswith("-") and nxt not in ("-h", "--help", "--order", "--"):
                out[i + 1] = " " + nxt
            break
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_shield_series_spec(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except UndefinedProductError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
