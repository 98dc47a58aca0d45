"""Command line interface.

Subcommands operate on the JSON schemas documented in the README: modules
in/out as {"ring", "rank", "convention", "phi"}, polygons as {"segments"},
experiment reports as {"schema": "dvg-report/1", "body", "wall_time_s"}.
Exit codes: 0 success, 1 a verdict-style failure (a stability run found a
counterexample), 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dieudonne, harness, minimal, newton, relation
from .errors import DvgError
from .harness import COUNTEREXAMPLE
from .wittring import make_ring


def _read_input(args) -> dict:
    if args.infile and args.infile != "-":
        with open(args.infile) as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _write_output(args, data) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if args.outfile and args.outfile != "-":
        with open(args.outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_io(sub) -> None:
    sub.add_argument("--in", dest="infile", default=None,
                     help="input JSON file (default: stdin)")
    sub.add_argument("--out", dest="outfile", default=None,
                     help="output JSON file (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dvg",
        description="Exact arithmetic with Dieudonne modules: Newton "
                    "polygons, minimal modules, duality, isogeny-cutoff "
                    "experiments.")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("np", help="Newton polygon of a module")
    _add_io(s)

    s = subs.add_parser("anumber", help="a-number of a module")
    _add_io(s)

    s = subs.add_parser("qx", help="annihilating-relation data and polygon")
    _add_io(s)
    s.add_argument("--budget", type=int, default=64)
    s.add_argument("--seed", type=int, default=0)

    s = subs.add_parser("minimal", help="build a minimal module")
    _add_io(s)
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--np", dest="np_json",
                       help='polygon JSON, e.g. \'{"segments":[{"slope":"1/2","mult":2}]}\'')
    group.add_argument("--ci-di", dest="ci_di",
                       help='coprime blocks, e.g. "1,1;2,3"')
    s.add_argument("--p", type=int, default=2)
    s.add_argument("--deg", type=int, default=1)
    s.add_argument("--precision", type=int, default=None)

    s = subs.add_parser("witness", help="build and verify the sharpness witness")
    _add_io(s)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--deg", type=int, default=1)
    s.add_argument("--trials", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--precision", type=int, default=None)

    s = subs.add_parser("verify", help="perturbation stability experiment")
    _add_io(s)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)

    s = subs.add_parser("dual", help="Cartier dual of a module")
    _add_io(s)

    s = subs.add_parser("enumerate", help="all Newton polygons for (c, d)")
    _add_io(s)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--d", type=int, required=True)

    s = subs.add_parser("bounds", help="cutoff bounds table")
    _add_io(s)
    s.add_argument("--cmax", type=int, required=True)
    s.add_argument("--dmax", type=int, required=True)

    return parser


def _cmd_np(args) -> int:
    module = dieudonne.module_from_json(_read_input(args))
    _write_output(args, newton.polygon_to_json(newton.np_of_module(module)))
    return 0


def _cmd_anumber(args) -> int:
    module = dieudonne.module_from_json(_read_input(args))
    _write_output(args, {"a_number": relation.a_number(module)})
    return 0


def _cmd_qx(args) -> int:
    module = dieudonne.module_from_json(_read_input(args))
    cyc = relation.find_cyclic_vector(module, budget=args.budget, seed=args.seed)
    data = relation.relation_coefficients(module, cyc)
    _write_output(args, relation.relation_to_json(data))
    return 0


def _cmd_minimal(args) -> int:
    if args.np_json is not None:
        poly = newton.polygon_from_json(json.loads(args.np_json))
    else:
        blocks = []
        for part in args.ci_di.split(";"):
            c_i, d_i = part.split(",")
            blocks.append((int(c_i), int(d_i)))
        poly = newton.np_from_blocks(blocks)
    c = poly.rank - poly.total_rise
    d = poly.total_rise
    precision = args.precision
    if precision is None:
        precision = max(harness.default_precision(max(c, 1), max(d, 1), args.deg),
                        args.deg * d + 2)
    ring = make_ring(args.p, args.deg, precision)
    module = minimal.build_minimal(ring, poly)
    _write_output(args, dieudonne.module_to_json(module, provenance="minimal"))
    return 0


def _cmd_witness(args) -> int:
    report = harness.witness_lower(args.c, args.d, args.p, args.deg,
                                   trials=args.trials, seed=args.seed,
                                   precision=args.precision)
    _write_output(args, report.to_json())
    return 0


def _cmd_verify(args) -> int:
    module = dieudonne.module_from_json(_read_input(args))
    report = harness.verify_cutoff_upper(module, level=args.level,
                                         trials=args.trials, seed=args.seed)
    _write_output(args, report.to_json())
    return 1 if report.verdict == COUNTEREXAMPLE else 0


def _cmd_dual(args) -> int:
    module = dieudonne.module_from_json(_read_input(args))
    _write_output(args, dieudonne.module_to_json(dieudonne.dual(module),
                                                 provenance="dual"))
    return 0


def _cmd_enumerate(args) -> int:
    polys = newton.np_enumerate(args.c, args.d)
    _write_output(args, [newton.polygon_to_json(poly) for poly in polys])
    return 0


def _cmd_bounds(args) -> int:
    _write_output(args, harness.run_table(args.cmax, args.dmax).to_json())
    return 0


_COMMANDS = {
    "np": _cmd_np,
    "anumber": _cmd_anumber,
    "qx": _cmd_qx,
    "minimal": _cmd_minimal,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "dual": _cmd_dual,
    "enumerate": _cmd_enumerate,
    "bounds": _cmd_bounds,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (DvgError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"verdict failure: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
