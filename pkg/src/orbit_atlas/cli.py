"""Command-line entry point: ``orbit-atlas <command> ...``.

Exit codes: 0 success or verified, 1 verification counterexample,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from .checks import CHECKS, CheckConfig
from .grassmann import (
    Color,
    Coloring,
    ConsistentInvolution,
    Partition,
    bitstring_from_partition,
    codimension_d,
    coloring,
    max_orbit_involution,
)
from .involutions import (
    MAX_N,
    compare_orders,
    enumerate_involutions,
    orbit_dimension,
    parse_arcs,
)
from .linalg import (
    SlicePoint,
    Subspace,
    arc_indicator_point,
    generic_point,
    identify_orbit,
    parameter_name,
    random_point,
    slice_embed,
    slice_subspaces,
    symbolic_slice_matrix,
    zero_point,
)
from .poset import PosetMeta, dot_label, export_dot, export_json, melnikov_poset, restricted_poset
from .render import render_ascii, render_svg

ENUMERATION_LIMIT = 10
VERIFY_LIMIT = 6
COMPARE_LIMIT = 6


class InputError(ValueError):
    pass


def default_seed() -> int:
    raw = os.environ.get("ORBIT_ATLAS_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"ORBIT_ATLAS_SEED={raw!r} is not an integer") from None


def parse_partition(text: str, n: int, k: int | None) -> Partition:
    text = text.strip()
    parts = tuple(int(p) for p in text.split(",")) if text else ()
    return Partition(parts, len(parts) if k is None else k, n)


def _check_size(n: int, limit: int, unsafe: bool) -> None:
    if n < 1:
        raise InputError("--n must be positive")
    if n > limit and not unsafe:
        raise InputError(f"n={n} exceeds the default limit {limit}; pass --unsafe-large")
    if n > MAX_N:
        raise InputError(f"n={n} exceeds the hard enumeration bound {MAX_N}")


def _partitions(args) -> tuple[Partition, Partition]:
    if args.lam is None or args.mu is None:
        raise InputError("--lambda and --mu are both required here")
    return parse_partition(args.lam, args.n, args.k), parse_partition(args.mu, args.n, args.m)


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_involutions(args) -> int:
    _check_size(args.n, ENUMERATION_LIMIT, args.unsafe_large)
    elements = enumerate_involutions(args.n)
    if args.format == "json":
        rows = [{"one_line": list(w.images), "cycles": w.cycle_notation(),
                 "arcs": len(w.arcs), "dim": orbit_dimension(w)} for w in elements]
        sys.stdout.write(json.dumps({"n": args.n, "count": len(rows), "involutions": rows},
                                    indent=2) + "\n")
        return 0
    width = max(len(w.cycle_notation()) for w in elements)
    print(f"{'#':>5}  {'one-line':<{2 * args.n}} {'cycles':<{width}}  arcs  dim")
    for idx, w in enumerate(elements, start=1):
        one_line = " ".join(map(str, w.images))
        print(f"{idx:>5}  {one_line:<{2 * args.n}} {w.cycle_notation():<{width}}  "
              f"{len(w.arcs):>4}  {orbit_dimension(w):>3}")
    return 0


def cmd_poset(args) -> int:
    _check_size(args.n, ENUMERATION_LIMIT, args.unsafe_large)
    if args.setting == "nilpotent":
        poset = melnikov_poset(args.n)
        meta = PosetMeta("nilpotent", args.n)
        level = orbit_dimension
    else:
        lam, mu = _partitions(args)
        poset = restricted_poset(lam, mu)
        meta = PosetMeta("grassmannian", args.n, lam, mu)
        level = lambda x: -codimension_d(x)
    if args.out == "json":
        text = export_json(poset, meta)
    else:
        text = export_dot(poset, dot_label, level=level)
    _write(text, args.output)
    return 0


def cmd_verify(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    config = CheckConfig(args.check, args.max_n, args.trials, seed)
    if config.max_n > VERIFY_LIMIT and not args.unsafe_large:
        raise InputError(f"--max-n {args.max_n} exceeds {VERIFY_LIMIT}; pass --unsafe-large")
    report = config.run()
    sys.stdout.write(report.text())
    return 0 if report.passed else 1


def _parse_params(spec: str, c: Coloring, seed: int) -> SlicePoint:
    key = spec.strip().lower()
    if key in ("zero", "all-zero"):
        return zero_point(c)
    if key == "generic":
        return generic_point(c)
    if key == "random":
        return random_point(c, np.random.default_rng(seed))
    values = {pair: Fraction(0) for pair in c.black_white_pairs()}
    for chunk in spec.split(","):
        try:
            pair, value = chunk.split("=")
            i, j = (int(x) for x in pair.strip().lstrip("t").split("-"))
            values_key = (i, j)
            parsed = Fraction(value.strip())
        except ValueError:
            raise InputError(f"cannot parse slice parameter {chunk!r}; expected i-j=p/q") from None
        if values_key not in values:
            raise InputError(f"({i},{j}) is not a Black-White pair of coloring {c}")
        values[values_key] = parsed
    return SlicePoint.from_mapping(c, values)


def _format_vector(v: Sequence) -> str:
    terms = []
    for i, x in enumerate(v, start=1):
        if x == 0:
            continue
        if isinstance(x, str):
            terms.append(f"{x} e{i}")
        else:
            coeff = "" if x == 1 else "-" if x == -1 else f"{x} "
            terms.append(f"{coeff}e{i}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _format_subspace(name: str, space: Subspace) -> str:
    gens = ", ".join(_format_vector(col) for col in space.basis.columns())
    lines = [f"{name} = <{gens}>  (dim {space.dim})", f"{name} basis (columns):"]
    lines += ["  " + line for line in space.basis.to_text().splitlines()]
    return "\n".join(lines)


def _symbolic_subspaces(lam: Partition, mu: Partition) -> str:
    c, n = coloring(lam, mu), lam.n
    bits = bitstring_from_partition(lam)
    gens = []
    for pos in range(1, n + 1):
        if c[pos] == Color.GREY and bits[pos - 1]:
            gens.append(f"e{pos}")
        elif c[pos] == Color.WHITE:
            terms = [f"e{pos}"] + [f"{parameter_name(i, pos, n)} e{i}"
                                   for i in c.blacks if i < pos]
            gens.append(" + ".join(terms))
    w_gens = [f"e{i}" for i, b in enumerate(bitstring_from_partition(mu), start=1) if b]
    return (f"U(t) = <{', '.join(gens)}>\nW = <{', '.join(w_gens)}>\n"
            f"slice dimension: {len(c.black_white_pairs())}\n")


def cmd_slice(args) -> int:
    lam, mu = _partitions(args)
    c = coloring(lam, mu)
    seed = default_seed() if args.seed is None else args.seed
    if args.w is not None and args.params is not None:
        raise InputError("give at most one of --w and --params")
    point = None
    if args.w is not None:
        w = parse_arcs(args.w, args.n)
        try:
            cw = ConsistentInvolution(w, c)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        point = arc_indicator_point(cw)
    elif args.params is not None:
        point = _parse_params(args.params, c, seed)

    out = [f"coloring: {c}  (B=black, G=grey, W=white)"]
    if args.emit == "matrix":
        if point is None:
            cells = symbolic_slice_matrix(c)
            width = max(len(x) for row in cells for x in row)
            out += [" ".join(f"{x:>{width}}" for x in row) for row in cells]
            out.append(f"slice dimension: {len(c.black_white_pairs())}")
        else:
            out.append(slice_embed(point).to_text().rstrip("\n"))
    elif args.emit == "subspaces":
        if point is None:
            out.append(_symbolic_subspaces(lam, mu).rstrip("\n"))
        else:
            u, w_space = slice_subspaces(point, lam, mu)
            out.append(_format_subspace("U", u))
            out.append(_format_subspace("W", w_space))
    else:
        point = point or generic_point(c)
        found = identify_orbit(slice_embed(point))
        top = max_orbit_involution(c).w
        out.append(f"identified orbit: {found}")
        out.append(f"open orbit: {top}" + ("  (generic)" if found == top else ""))
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_render(args) -> int:
    _check_size(args.n, ENUMERATION_LIMIT, args.unsafe_large)
    w = parse_arcs(args.w or "", args.n)
    c = None
    if args.lam is not None or args.mu is not None:
        lam, mu = _partitions(args)
        c = coloring(lam, mu)
        try:
            ConsistentInvolution(w, c)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    text = render_svg(w, c) if args.format == "svg" else render_ascii(w, c)
    _write(text, args.output)
    return 0


def cmd_compare_orders(args) -> int:
    if not 1 <= args.max_n <= COMPARE_LIMIT:
        raise InputError(f"--max-n must lie in 1..{COMPARE_LIMIT}")
    for n in range(1, args.max_n + 1):
        diffs = compare_orders(n)
        if not diffs:
            print(f"n={n}: Bruhat and Melnikov orders coincide on I_{n}")
            continue
        print(f"n={n}: orders differ on {len(diffs)} ordered pairs")
        for d in diffs:
            print(f"  {d.v} vs {d.w}: melnikov_leq={d.melnikov} bruhat_leq={d.bruhat}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbit-atlas",
                                     description="Borel orbits on square-zero matrices "
                                                 "and on pairs of Grassmannians")
    sub = parser.add_subparsers(dest="command", required=True)

    def partition_flags(p, required_n=True):
        p.add_argument("--n", type=int, required=required_n, help="ambient dimension")
        p.add_argument("--lambda", dest="lam", help="parts of lambda, e.g. 5,4,2,1")
        p.add_argument("--mu", help="parts of mu, e.g. 4,4,4,1,1")
        p.add_argument("--k", type=int, help="rows of the lambda box (default: number of parts)")
        p.add_argument("--m", type=int, help="rows of the mu box (default: number of parts)")

    p = sub.add_parser("involutions", help="list I_n with orbit dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(func=cmd_involutions)

    p = sub.add_parser("poset", help="Hasse diagram of an orbit poset")
    p.add_argument("--setting", choices=("nilpotent", "grassmannian"), required=True)
    partition_flags(p)
    p.add_argument("--out", choices=("dot", "json"), default="dot")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run an exhaustive or randomized check")
    p.add_argument("--check", choices=CHECKS, required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, help="default: $ORBIT_ATLAS_SEED or 0")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("slice", help="the transversal slice and its matrix embedding")
    partition_flags(p)
    p.add_argument("--w", help="arc list such as 1-7,5-9 (arc-indicator slice point)")
    p.add_argument("--params", help="zero | generic | random | i-j=p/q,...")
    p.add_argument("--emit", choices=("subspaces", "matrix", "identify"), default="matrix")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("render", help="draw an arc diagram")
    partition_flags(p)
    p.add_argument("--w", default="", help="arc list such as 1-7,2-3,5-8")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--output")
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("compare-orders", help="Bruhat vs Melnikov order on I_n")
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_compare_orders)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # InputError and the library's validation errors are both ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
