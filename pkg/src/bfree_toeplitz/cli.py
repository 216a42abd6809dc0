"""Command-line interface.

One subcommand per library operation group, machine-readable output
(json by default, csv/text on request), deterministic ordering throughout.
Exit codes: 0 success, 1 validation error, 2 depth or window insufficiency,
3 search budget refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import automorphism, counterexample, odometer, toeplitz
from .bfree import (
    BFreeFamily,
    eta_window,
    family_for_window,
    make_family,
    taut_check_truncated,
)
from .errors import (
    ComplexityRefusalError,
    DepthInsufficientError,
    FamilyError,
    WindowTooShortError,
)

def _default_budget() -> int:
    return int(os.environ.get("BFREE_BUDGET", 10**6))


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; keep 2 for depth errors only
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_b(text: str) -> BFreeFamily:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise FamilyError(f"cannot parse generator list {text!r}") from exc
    return make_family(values)


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like LO..HI, got {text!r}")
    return int(lo), int(hi)


def _parse_anchors(text: str) -> tuple[int, ...]:
    if ".." in text:
        lo, hi = _parse_range(text)
        return tuple(range(lo, hi + 1))
    return tuple(int(x) for x in text.split(",") if x.strip())


def _frac(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def _flatten(prefix: str, obj, rows: list[tuple[str, str]]):
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(f"{prefix}.{key}" if prefix else str(key), obj[key], rows)
    elif isinstance(obj, (list, tuple)):
        for i, item in enumerate(obj):
            _flatten(f"{prefix}[{i}]", item, rows)
    else:
        rows.append((prefix, "" if obj is None else str(obj)))


def _emit(data: dict, fmt: str, text_body: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    elif fmt == "csv":
        rows: list[tuple[str, str]] = []
        _flatten("", data, rows)
        print("key,value")
        for key, value in rows:
            print(f"{key},{value}")
    else:
        print(text_body if text_body is not None else json.dumps(data, sort_keys=True, indent=2))


def _window_args(args) -> tuple[int, int]:
    lo, hi = _parse_range(args.range)
    if hi <= lo:
        raise ValueError(f"empty range {args.range}")
    return lo, hi


def _cmd_gen(args) -> int:
    family = _parse_b(args.b)
    if args.depth:
        family = family.deepened(args.depth)
    lo, hi = _window_args(args)
    window = eta_window(family, lo, hi)
    data = {"start": window.start, "end": window.end, "symbols": window.symbols}
    _emit(data, args.format, text_body=window.symbols)
    return 0


def _cmd_skeleton(args) -> int:
    family = _parse_b(args.b)
    block = toeplitz.skeleton_exact(family, args.t)
    _emit(block.to_json(), args.format, text_body=block.cells)
    return 0


def _cmd_holes(args) -> int:
    family = _parse_b(args.b)
    block = toeplitz.skeleton_exact(family, args.t)
    data = {"t": args.t, "p_t": block.length, "holes": list(block.hole_positions)}
    _emit(data, args.format, text_body=" ".join(map(str, block.hole_positions)))
    return 0


def _cmd_gaps(args) -> int:
    family = _parse_b(args.b)
    block = toeplitz.skeleton_exact(family, args.t)
    data = {
        "t": args.t,
        "k_t": toeplitz.cyclic_min_gap(block.hole_positions, block.length),
        "first_holes": list(block.hole_positions[:2]),
    }
    _emit(data, args.format, text_body=str(data["k_t"]))
    return 0


def _cmd_stabilizer(args) -> int:
    family = _parse_b(args.b)
    stab = sorted(automorphism.hole_stabilizer(family, args.t, args.kprime))
    data = {"t": args.t, "kprime": args.kprime, "stabilizer": stab}
    _emit(data, args.format, text_body=" ".join(map(str, stab)))
    return 0


def _cmd_autosearch(args) -> int:
    family = _parse_b(args.b)
    lo, hi = _window_args(args)
    family = family_for_window(family, lo, hi)
    window = eta_window(family, lo, hi)
    report = automorphism.endomorphism_search(
        window,
        max_width=args.width,
        anchors=_parse_anchors(args.anchors),
        horizon=args.horizon,
        budget=args.budget if args.budget is not None else _default_budget(),
    )
    data = report.to_json()
    data["generators"] = list(family.generators)
    data["window"] = [lo, hi]
    _emit(data, args.format)
    return 0


def _cmd_taut(args) -> int:
    family = _parse_b(args.b)
    report = taut_check_truncated(family, args.t)
    data = {
        "t": report.t,
        "base": _frac(report.base.density),
        "removals": [_frac(r.density) for r in report.removals],
        "taut": report.is_taut_at_t,
    }
    _emit(data, args.format, text_body=f"taut at t={report.t}: {report.is_taut_at_t}")
    return 0


def _cmd_counterexample(args) -> int:
    bits = tuple(int(c) for c in args.bits) if args.bits else ()
    construction = counterexample.make_construction(args.seed, bits, args.depth)
    data: dict = {
        "seed": construction.seed,
        "bits": list(construction.fill_bits),
        "depth": construction.depth,
        "blocks": [b.to_json() for b in construction.blocks],
    }
    if args.closure_len:
        data["closure"] = {
            str(length): counterexample.complement_closure_check(construction, length)
            for length in range(1, args.closure_len + 1)
        }
    if args.range:
        lo, hi = _parse_range(args.range)
        window = counterexample.window_of(construction, lo, hi)
        data["window"] = {"start": window.start, "symbols": window.symbols}
        data["detected_period"] = counterexample.detect_period(window.symbols)
    _emit(data, args.format)
    return 0


def _cmd_odometer(args) -> int:
    family = _parse_b(args.b)
    depth = args.depth or family.depth
    family = family.deepened(depth)
    element = odometer.from_integer(family, args.n, depth)
    classification = odometer.classify_at_depth(family, element)
    data = element.to_json()
    data["classification"] = {
        "in_g2": classification.in_g2,
        "g1_shift": classification.g1_shift,
        "in_g0_at_depth": classification.in_g0_at_depth,
    }
    _emit(data, args.format, text_body=" ".join(map(str, element.residues)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bfree-toeplitz", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="json"):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)

    p = sub.add_parser("gen", help="dump an eta window (ranges are half-open LO..HI)")
    p.add_argument("--b", required=True, help="comma-separated odd pairwise-coprime generators")
    p.add_argument("--range", required=True, help="window LO..HI (half-open)")
    p.add_argument("--depth", type=int, default=0, help="extend the family to this depth first")
    common(p, "text")
    p.set_defaults(func=_cmd_gen)

    for name, func, help_text in (
        ("skeleton", _cmd_skeleton, "level-t skeleton block"),
        ("holes", _cmd_holes, "hole positions of the level-t skeleton"),
        ("gaps", _cmd_gaps, "minimal cyclic hole gap k_t"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--b", required=True)
        p.add_argument("--t", type=int, required=True)
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("stabilizer", help="all n with (holes - n + k') mod p_t = holes")
    p.add_argument("--b", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kprime", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_stabilizer)

    p = sub.add_parser("autosearch", help="exhaustive sliding-code endomorphism search")
    p.add_argument("--b", required=True)
    p.add_argument("--range", required=True, help="window LO..HI (half-open); family deepens automatically")
    p.add_argument("--width", type=int, default=3, help="maximum rule width")
    p.add_argument("--anchors", default="0", help="anchor offsets: LO..HI (inclusive) or comma list")
    p.add_argument("--horizon", type=int, default=8, help="image factor length validated against the window")
    p.add_argument(
        "--budget", type=int, default=None, help="maximum number of rule checks (default: $BFREE_BUDGET or 10^6)"
    )
    common(p)
    p.set_defaults(func=_cmd_autosearch)

    p = sub.add_parser("taut", help="truncated tautness densities at level t")
    p.add_argument("--b", required=True)
    p.add_argument("--t", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_taut)

    p = sub.add_parser("counterexample", help="complement-closed Toeplitz construction")
    p.add_argument("--seed", required=True, help="seed 0/1 word")
    p.add_argument("--bits", default="", help="fill bits, e.g. 000")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--closure-len", type=int, default=0, help="check complement closure up to this factor length")
    p.add_argument("--range", default="", help="also dump the determined word on LO..HI")
    common(p)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("odometer", help="odometer element of an integer, with classification")
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_odometer)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = getattr(args, "budget", None)
    if budget is not None and budget <= 0:
        print("budget must be positive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (DepthInsufficientError,) as exc:
        print(f"depth insufficient at position {exc.position}", file=sys.stderr)
        return 2
    except WindowTooShortError as exc:
        print(f"window too short: {exc}", file=sys.stderr)
        return 2
    except ComplexityRefusalError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return 3
    except (FamilyError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
