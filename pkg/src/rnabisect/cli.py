"""Command-line interface: gen, solve, verify, bounds, reduce.

stdout carries data, stderr diagnostics. Exit codes: 0 ok, 1 verification
mismatch, 2 bad input, 3 size guard exceeded, 4 reduction precondition.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import ReductionError, kang_bound, reduce_cycle_power, ska_bounds
from .coloring import BalancedColoring, ColoringError
from .exact import ExactConfig, SizeGuardError, branch_and_bound_rna, brute_force_rna
from .graph import FamilyTag, GraphError, make_family, parse_edge_list, serialize_edge_list
from .heuristic import LocalSearchConfig, local_search_rna
from .verify import MISMATCH, grid, sweep, write_csv

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_GUARD, EXIT_REDUCE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_graph(path: str):
    try:
        with open(path, "rb") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from exc
    except (GraphError, UnicodeDecodeError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from exc


def _write(data: bytes, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(data.decode("ascii"))
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _d_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected D or LO..HI, got {text!r}")


def cmd_gen(args) -> int:
    tag = FamilyTag(args.family, args.n, args.d or 0)
    if args.family == "cycle-power" and args.d is None:
        raise CliError("cycle-power needs --d", EXIT_INPUT)
    try:
        g = make_family(tag)
    except GraphError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    _write(serialize_edge_list(g), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read_graph(args.input)
    config = ExactConfig()
    if args.guard_n is not None:
        config.brute_guard_n = config.bnb_guard_n = args.guard_n
    try:
        if args.method == "brute":
            rep = brute_force_rna(g, config)
        elif args.method == "bnb":
            rep = branch_and_bound_rna(g, budget=args.budget, config=config)
        else:
            if g.n < 2:
                raise CliError("heuristic needs at least two vertices", EXIT_INPUT)
            rep = local_search_rna(g, LocalSearchConfig(seed=args.seed, restarts=args.restarts))
    except SizeGuardError as exc:
        raise CliError(str(exc), EXIT_GUARD) from exc
    print(json.dumps(rep.to_dict()))
    return EXIT_OK


def cmd_verify(args) -> int:
    points = grid(args.d, args.n_max, args.n_min)
    if any(d < 2 for d, _ in points) or not points:
        raise CliError("verify needs d >= 2 and a non-empty grid", EXIT_INPUT)
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        records = write_csv(sweep(points, args.method, args.guard_n, args.jobs), out)
    finally:
        if out is not sys.stdout:
            out.close()
    bad = [r for r in records if r.status == MISMATCH]
    for r in bad:
        print(f"MISMATCH at d={r.d} n={r.n}: exact={r.exact} formula={r.formula}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_bounds(args) -> int:
    g = _read_graph(args.input)
    out = {"kang": kang_bound(g)}
    fam = g.family
    if fam is not None and fam.kind == "cycle-power" and fam.d >= 2:
        out["ska_lower"], out["ska_upper"] = ska_bounds(fam.d)
    print(json.dumps(out))
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        f = BalancedColoring.from_string(args.coloring)
    except ColoringError as exc:
        raise CliError(str(exc), EXIT_REDUCE) from exc
    try:
        res = reduce_cycle_power(args.n, args.d, f, args.pivot)
    except (ReductionError, ValueError) as exc:
        raise CliError(str(exc), EXIT_REDUCE) from exc
    if args.emit_h:
        _write(serialize_edge_list(res.H), args.emit_h)
    print(json.dumps(res.to_dict()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rnabisect", description="rna number / minimum bisection width tools")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a family graph as an edge list")
    g.add_argument("family", choices=["cycle-power", "path", "cycle", "star", "wheel", "complete"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int)
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="compute the rna number of an edge-list file")
    s.add_argument("input")
    s.add_argument("--method", choices=["brute", "bnb", "heuristic"], default="bnb")
    s.add_argument("--guard-n", type=int)
    s.add_argument("--budget", type=int, help="node limit for bnb")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=16)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="sweep C_n^d and compare exact values with d(d+1)")
    v.add_argument("--d", type=_d_range, required=True, help="D or LO..HI")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--n-min", type=int)
    v.add_argument("--method", choices=["brute", "bnb"], default="brute")
    v.add_argument("--guard-n", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0, help="unused by exact methods; accepted for uniformity")
    v.add_argument("-o", "--output", default="-")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="closed-form bounds for an edge-list file")
    b.add_argument("input")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("reduce", help="delete a vertex of C_n^d and patch it to C_{n-1}^d")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--coloring", required=True, help="string of 1/2, one per vertex")
    r.add_argument("--pivot", type=int, default=0)
    r.add_argument("--emit-h", help="also write H as an edge-list file")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
