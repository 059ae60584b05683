"""Command-line interface.

One subcommand per library operation; ``--json`` switches any command to the
machine-readable schema of the module it fronts.  Exit status: 0 on success
or a passing verification, 1 when a verification fails, 2 on usage or input
errors.  Commands that take ``--diagram`` accept ``-`` to read one
serialized diagram per line from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from . import decomp, extgraph, glweights, paths, rng
from .diagrams import (
    DiagramSum,
    WeightDiagram,
    enumerate_matching,
    from_spec,
    parse,
    serialize,
)
from .errors import EmptyWeight, KacDecompError
from .moves import sigma, sigma_product
from .render import render


def _window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("window must look like LO..HI")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError("window is empty")
    return lo_i, hi_i


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kacdecomp",
        description="Kac-module composition factors via weight and cap diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = add("decompose", "composition factors of a Kac module")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--diagram", help="serialized diagram, or - for stdin batch")
    src.add_argument("--weight", help="shifted weight tuple a1,..|b1,..")
    p.add_argument(
        "--epsdelta",
        action="store_true",
        help="interpret --weight as eps/delta coefficients and shift it",
    )

    p = add("containing", "the 2^k Kac modules containing a simple module")
    p.add_argument("--diagram", required=True)

    p = add("sigma", "signed move operators")
    p.add_argument("--diagram", required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--i", type=int, help="apply the single operator sigma_i")
    which.add_argument(
        "--product", action="store_true", help="expand (1+sigma_1)...(1+sigma_k)"
    )

    p = add("match", "matching diagrams by exhaustive enumeration")
    p.add_argument("--diagram", required=True)

    p = add("paths", "increasing paths in the move graph")
    p.add_argument("--from", dest="src", required=True, metavar="DIAGRAM")
    p.add_argument("--to", dest="dst", required=True, metavar="DIAGRAM")
    p.add_argument("--regular-only", action="store_true")

    p = add("ext", "first extensions between simple modules")
    p.add_argument("--diagram", required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--to", dest="dst", metavar="DIAGRAM")
    which.add_argument("--radius", type=int)
    p.add_argument("--dot", action="store_true", help="DOT output (neighborhoods)")

    p = add("render", "draw a diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--style", choices=("cap", "weight"), default="cap")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")

    p = add("verify", "check the three decomposition routes agree")
    p.add_argument("--k", type=int, required=True, help="max crosses")
    p.add_argument(
        "--window",
        type=_window,
        required=True,
        metavar="LO..HI",
        help="position window; write --window=-5..5 for negative bounds",
    )
    p.add_argument("--random", type=int, default=0, metavar="N")
    p.add_argument("--seed", type=int, default=1)

    p = add("catalan", "staircase factor count against the Catalan number")
    p.add_argument("--k", type=int, required=True)

    p = add("conjecture", "scan for Catalan-bound counterexamples")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--window", type=_window, required=True, metavar="LO..HI")

    p = add("invert", "multiplicity matrix over seed diagrams and its inverse")
    p.add_argument("--seeds", required=True, help="file with one diagram per line")
    p.add_argument("--levels", type=int, default=1)

    return parser


def _input_diagrams(arg: str) -> list[WeightDiagram]:
    if arg == "-":
        return [parse(line.strip()) for line in sys.stdin if line.strip()]
    return [parse(arg)]


def _weight_or_dash(f: WeightDiagram) -> str:
    try:
        return glweights.serialize_weight(glweights.from_diagram(f))
    except EmptyWeight:
        return "-"


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _batched(objs: list, many: bool):
    return objs if many else objs[0]


def _cmd_decompose(args) -> int:
    if args.weight is not None:
        if args.epsdelta:
            w = glweights.shift(glweights.parse_epsdelta(args.weight))
        else:
            w = glweights.parse_weight(args.weight)
        diagrams = [glweights.to_diagram(w)]
    else:
        diagrams = _input_diagrams(args.diagram)
    out = []
    for f in diagrams:
        factors = decomp.decompose(f)
        out.append(
            {
                "diagram": serialize(f),
                "factors": [serialize(g) for g in factors],
                "weights": [_weight_or_dash(g) for g in factors],
            }
        )
    if args.json:
        _emit_json(_batched(out, len(out) > 1))
    else:
        for block in out:
            print(f"K({block['diagram']}) has {len(block['factors'])} factors:")
            for s, w in zip(block["factors"], block["weights"]):
                print(f"  {s or '(empty)'}  {w}")
    return 0


def _cmd_containing(args) -> int:
    out = []
    for f in _input_diagrams(args.diagram):
        mods = decomp.kac_modules_containing(f)
        out.append(
            {"diagram": serialize(f), "containing": [serialize(g) for g in mods]}
        )
    if args.json:
        _emit_json(_batched(out, len(out) > 1))
    else:
        for block in out:
            print(
                f"L({block['diagram']}) occurs in {len(block['containing'])} Kac modules:"
            )
            for s in block["containing"]:
                print(f"  {s or '(empty)'}")
    return 0


def _cmd_sigma(args) -> int:
    out = []
    for f in _input_diagrams(args.diagram):
        if args.product:
            total = sigma_product(f)
        else:
            total = sigma(args.i, DiagramSum.basis(f))
        out.append(total)
    if args.json:
        objs = [t.to_json_obj() for t in out]
        _emit_json(_batched(objs, len(objs) > 1))
    else:
        for t in out:
            print(t)
    return 0


def _cmd_match(args) -> int:
    out = []
    for f in _input_diagrams(args.diagram):
        found = enumerate_matching(f)
        out.append(
            {"diagram": serialize(f), "matching": [serialize(g) for g in found]}
        )
    if args.json:
        _emit_json(_batched(out, len(out) > 1))
    else:
        for block in out:
            print(f"{len(block['matching'])} matching diagrams:")
            for s in block["matching"]:
                print(f"  {s or '(empty)'}")
    return 0


def _cmd_paths(args) -> int:
    f, g = parse(args.src), parse(args.dst)
    if args.regular_only:
        found = paths.regular_paths(f, g)
    else:
        found = paths.increasing_paths(f, g)
    if args.json:
        _emit_json([p.to_json_obj() for p in found])
    else:
        print(f"{len(found)} paths from {serialize(f) or '(empty)'} to {serialize(g) or '(empty)'}:")
        for p in found:
            kind = "regular" if paths.classify(p).regular else "irregular"
            labels = " ".join(f"[{s},{t}]" for s, t in p.labels) or "(empty)"
            print(f"  {labels}  weight={p.weight}  {kind}")
        coeff = paths.path_coefficient(f, g)
        print(f"signed sum = {coeff}")
    return 0


def _cmd_ext(args) -> int:
    f = parse(args.diagram)
    if args.dst is not None:
        g = parse(args.dst)
        dim = extgraph.ext_dim(f, g)
        if args.json:
            _emit_json(
                {"from": serialize(f), "to": serialize(g), "ext_dim": dim}
            )
        else:
            print(f"ext_dim = {dim}")
        return 0
    radius = 1 if args.radius is None else args.radius
    comp = extgraph.ext_component(f, radius)
    if args.json:
        _emit_json(comp.to_json_obj())
    elif args.dot:
        print(comp.to_dot(), end="")
    else:
        print(f"{len(comp.vertices)} vertices, {len(comp.edges)} edges")
        for v in comp.vertices:
            print(f"  {serialize(v) or '(empty)'}")
        for e in comp.edges:
            print(
                f"  {serialize(e.source)} -> {serialize(e.target)}  [{e.start},{e.end}]"
            )
    return 0


def _cmd_render(args) -> int:
    for f in _input_diagrams(args.diagram):
        print(render(f, style=args.style, format=args.format), end="")
    return 0


def exhaustive_diagrams(
    max_crosses: int, lo: int, hi: int
) -> list[WeightDiagram]:
    """Every core-free diagram with 1..max_crosses crosses in [lo, hi]."""
    out = []
    for k in range(1, max_crosses + 1):
        for combo in combinations(range(lo, hi + 1), k):
            out.append(from_spec(combo))
    return out


def random_diagrams(
    count: int, seed: int, max_crosses: int, lo: int, hi: int, max_core: int = 4
) -> list[WeightDiagram]:
    """Seeded random diagrams; the draw procedure is part of the replay
    contract (see kacdecomp.rng)."""
    gen = rng.Lcg(seed)
    out = []
    for _ in range(count):
        crosses, core_left, core_right = rng.random_symbol_sets(
            gen, lo, hi, max_crosses, max_core
        )
        out.append(from_spec(crosses, core_left, core_right))
    return out


def _cmd_verify(args) -> int:
    lo, hi = args.window
    batch = exhaustive_diagrams(args.k, lo, hi)
    if args.random:
        batch += random_diagrams(args.random, args.seed, args.k, lo, hi)
    reports = [decomp.verify_routes(f) for f in batch]
    failed = [r for r in reports if not r.passed]
    if args.json:
        _emit_json(
            {
                "checked": len(reports),
                "passed": len(reports) - len(failed),
                "failed": len(failed),
                "failures": [r.to_json_obj() for r in failed],
            }
        )
    else:
        for r in failed:
            print(f"FAIL {serialize(r.diagram)}: " + "; ".join(r.mismatches))
        print(
            f"checked={len(reports)} passed={len(reports) - len(failed)} "
            f"failed={len(failed)}"
        )
    return 1 if failed else 0


def _cmd_catalan(args) -> int:
    count, expected, ok = decomp.catalan_check(args.k)
    if args.json:
        _emit_json(
            {"k": args.k, "count": count, "expected": expected, "pass": ok}
        )
    else:
        print(f"count={count} expected={expected} {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_conjecture(args) -> int:
    lo, hi = args.window
    bad = decomp.conjecture_scan(args.k, lo, hi)
    if args.json:
        _emit_json(
            {
                "k": args.k,
                "window": [lo, hi],
                "counterexamples": [
                    {"diagram": serialize(g), "count": n} for g, n in bad
                ],
            }
        )
    else:
        if bad:
            for g, n in bad:
                print(f"COUNTEREXAMPLE {serialize(g)}: {n} factors")
        else:
            print("no counterexamples")
    return 1 if bad else 0


def _cmd_invert(args) -> int:
    with open(args.seeds, encoding="utf-8") as fh:
        seeds = [parse(line.strip()) for line in fh if line.strip()]
    matrix = decomp.multiplicity_matrix(seeds, levels=args.levels)
    inverse = decomp.invert_unitriangular(matrix)
    if args.json:
        _emit_json(
            {"matrix": matrix.to_json_obj(), "inverse": inverse.to_json_obj()}
        )
    else:
        print("index:")
        for f in matrix.index:
            print(f"  {serialize(f) or '(empty)'}")
        print("matrix:")
        for row in matrix.dense():
            print("  " + " ".join(f"{v:3d}" for v in row))
        print("inverse:")
        for row in inverse.dense():
            print("  " + " ".join(f"{v:3d}" for v in row))
    return 0


_HANDLERS = {
    "decompose": _cmd_decompose,
    "containing": _cmd_containing,
    "sigma": _cmd_sigma,
    "match": _cmd_match,
    "paths": _cmd_paths,
    "ext": _cmd_ext,
    "render": _cmd_render,
    "verify": _cmd_verify,
    "catalan": _cmd_catalan,
    "conjecture": _cmd_conjecture,
    "invert": _cmd_invert,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except KacDecompError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
