"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 validation error (bad scenario
data), 4 computation error.  Set the NO_COLOR environment variable to
disable ANSI styling in text output.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import report
from .cones import cone_new
from .errors import (
    ComputationError,
    ScenarioError,
    UnknownNameError,
    ValidationError,
)
from .pipeline import quintic_conifold_scenario
from .scenario_io import parse_scenario
from .svg import render_cone_diagram

_TRANSLIT = str.maketrans(
    {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta", "∧": "*",
     "−": "-", "·": "*", "×": "*", " ": None, "\t": None}
)


def _canonical(name: str) -> str:
    return name.translate(_TRANSLIT).lower()


def _resolve_class(scenario, name):
    """Match a user-supplied name against scenario class names.

    Greek letters and wedge signs have ASCII spellings, so ``alpha*beta``
    finds ``α∧β``.  Returns the declared display name and the class.
    """
    table = {}
    for n, cls in zip(scenario.h11_names + scenario.codim_names,
                      scenario.h11_classes + scenario.codim_classes):
        table.setdefault(_canonical(n), (n, cls))
    hit = table.get(_canonical(name))
    if hit is None:
        known = ", ".join(scenario.h11_names + scenario.codim_names)
        raise UnknownNameError(f"unknown class name {name!r}; scenario declares: {known}")
    return hit


def _resolve_prime(scenario, name):
    table = {_canonical(n): n for n, _ in scenario.prime_divisors}
    hit = table.get(_canonical(name))
    if hit is None:
        known = ", ".join(n for n, _ in scenario.prime_divisors) or "(none)"
        raise UnknownNameError(
            f"unknown prime divisor {name!r}; scenario declares: {known}"
        )
    return hit


def _pair_arg(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'X,Y', got {text!r}")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"bad rational pair {text!r}: {e}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balcone",
        description="Exact intersection numbers and balanced-cone duality for "
        "complete intersections in products of projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument(
            "--scenario", metavar="FILE",
            help="scenario JSON file (default: built-in quintic conifold)",
        )
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument(
            "--out", metavar="FILE", help="write output to FILE instead of stdout"
        )
        return sp

    add("demo", "full pipeline report: intersection numbers, pairing, cones, gap")
    sp = add("intersect", "intersection number of named classes")
    sp.add_argument("factors", nargs="+", metavar="CLASS")
    add("pairing", "pairing matrix of the two bases with determinant")
    sp = add("dual", "dual cone under the intersection pairing")
    sp.add_argument(
        "--rays", nargs=2, type=_pair_arg, metavar="X,Y",
        help="cone generators in degree-1 coordinates (default: effective cone)",
    )
    add("image", "closure of the balanced-map image of the Kähler cone")
    add("balanced", "balanced cone as the pairing-dual of the effective cone")
    add("gap", "compare image closure with the balanced cone")
    sp = add("bound", "bound functional against a known prime divisor")
    sp.add_argument("prime", metavar="PRIME")
    sp.add_argument("ample", type=_pair_arg, metavar="C1,C2")
    add("render", "write the SVG cone diagram for the gap report")
    return parser


def _load_scenario(path):
    if path is None:
        return quintic_conifold_scenario()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioError(f"cannot read scenario file: {e}") from e
    return parse_scenario(text)


def run_command(scenario, args) -> dict:
    """Dispatch a parsed command to its payload builder."""
    cmd = args.command
    if cmd == "demo":
        return report.demo_payload(scenario)
    if cmd == "intersect":
        resolved = [_resolve_class(scenario, n) for n in args.factors]
        names = [n for n, _ in resolved]
        classes = [c for _, c in resolved]
        return report.intersect_payload(scenario, names, classes)
    if cmd == "pairing":
        return report.pairing_payload(scenario)
    if cmd == "dual":
        cone = scenario.effective_cone
        if args.rays is not None:
            cone = cone_new(args.rays[0], args.rays[1])
        return report.dual_payload(scenario, cone)
    if cmd == "image":
        return report.image_payload(scenario)
    if cmd == "balanced":
        return report.balanced_payload(scenario)
    if cmd == "gap":
        return report.gap_payload(scenario)
    if cmd == "bound":
        prime = _resolve_prime(scenario, args.prime)
        return report.bound_payload(scenario, prime, args.ample)
    raise AssertionError(f"unhandled command {cmd!r}")


def _color_enabled(args) -> bool:
    if args.format != "text" or args.out is not None:
        return False
    if os.environ.get("NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _write_output(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scenario = _load_scenario(args.scenario)
        if args.command == "render":
            text = render_cone_diagram(report.gap_payload(scenario))
        else:
            payload = run_command(scenario, args)
            if args.format == "json":
                text = report.render_json(payload)
            else:
                text = report.render_text(payload, color=_color_enabled(args))
        _write_output(text, args.out)
    except ScenarioError as e:
        print(f"scenario error: {e}", file=sys.stderr)
        return 3
    except UnknownNameError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"validation error: {e}", file=sys.stderr)
        return 3
    except ComputationError as e:
        print(f"computation error: {e}", file=sys.stderr)
        return 4
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
