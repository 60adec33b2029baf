"""Command-line entry point for reproducible experiments.

Subcommands: enumerate, compose, decompose, verify-relations, split-demo,
plane-closure.  Exit codes: 0 success, 1 domain error (single machine-
parsable line on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .decompose import build_report, build_table
from .enumeration import enumerate_points, load_registry, save_registry
from .errors import CubicError
from .geometry import Field, RATIONALS, normalize
from .relations import (
    group_law_suite,
    involution_suite,
    sextuple_suite,
    tangent_consistency_suite,
)
from .splitplane import BlowupModel, plane_closure, verify_claim1
from .surface import CubicSurface, secant_compose, surface_point

import random


def _coeffs(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(","))


def _field(text: str) -> Field:
    if text == "q":
        return RATIONALS
    if text.startswith("fp:"):
        return Field(int(text[3:]))
    raise argparse.ArgumentTypeError(f"field must be 'q' or 'fp:<prime>', got {text!r}")


def _default_threads() -> int:
    env = os.environ.get("CUBIC_MW_THREADS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def _add_common(sub):
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub.add_argument("--threads", type=int, default=None)


def cmd_enumerate(args) -> int:
    threads = args.threads if args.threads is not None else _default_threads()
    reg = enumerate_points(args.coeffs, args.height, threads=threads)
    # header stays independent of the thread count so reruns are byte-identical
    save_registry(reg, args.out, extra_header=[f"# tool: cubicmw {__version__}"])
    print(f"wrote {len(reg)} points to {args.out}")
    return 0


def cmd_compose(args) -> int:
    surface = CubicSurface.diagonal(args.coeffs)
    x = surface_point(surface, normalize(args.x))
    y = surface_point(surface, normalize(args.y))
    z = secant_compose(surface, x, y)
    print(" ".join(str(c) for c in z.coords))
    return 0


def cmd_decompose(args) -> int:
    reg = load_registry(args.points, args.coeffs)
    table = build_table(reg)
    report = build_report(table)
    payload = report.to_json_dict()
    payload["config"] = {
        "coeffs": list(args.coeffs),
        "points_file": args.points,
        "version": __version__,
    }
    with open(args.report, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    print(
        f"points={payload['points']} strong={payload['strong_count']} "
        f"weak_only={payload['weak_only_count']} generators={payload['generator_count']}"
    )
    return 0


def cmd_verify_relations(args) -> int:
    reg = enumerate_points(args.coeffs, args.height)
    results = [
        involution_suite(reg, args.trials, args.seed),
        sextuple_suite(reg, args.trials, args.seed),
        tangent_consistency_suite(reg, args.trials, args.seed),
    ]
    results += group_law_suite(min(args.trials, 100), args.seed)
    ok = True
    for r in results:
        print(r)
        ok = ok and r.ok
    return 0 if ok else 1


def cmd_split_demo(args) -> int:
    base = None if args.base == "default" else [
        _coeffs(part) for part in args.base.split(";")
    ]
    model = BlowupModel.build(base, args.field)
    terms = " + ".join(
        f"{c}*x^{''.join(map(str, e))}" for e, c in sorted(model.surface.coeffs.items())
    )
    print(f"surface: {terms} = 0")
    rng = random.Random(args.seed)
    good = degenerate = 0
    p = args.field.p
    while good < args.samples:
        if p is None:
            raws = [(1, rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(4)]
        else:
            raws = [(1, rng.randrange(p), rng.randrange(p)) for _ in range(4)]
        pts = [normalize(r, args.field) for r in raws]
        if len(set(pts)) < 4 or any(model.is_base(q) for q in pts):
            degenerate += 1
            continue
        try:
            agrees = verify_claim1(model, *pts)
        except CubicError:
            degenerate += 1
            continue
        if not agrees:
            print(f"claim-1 FAILURE at {pts}", file=sys.stderr)
            return 1
        good += 1
    print(f"claim-1 suite: {good} agreed, {degenerate} degenerate samples skipped")
    return 0


def cmd_plane_closure(args) -> int:
    seeds = [normalize(v, args.field) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]]
    if args.extra:
        seeds.append(normalize(_coeffs(args.extra), args.field))
    pts, gens = plane_closure(
        args.field, seeds, height_cap=args.cap, max_generations=args.max_generations
    )
    print(f"closure size {len(pts)} after {gens} generations")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cubicmw",
        description="Secant/tangent composition experiments on cubic surfaces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("enumerate", help="height-bounded point search")
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("compose", help="compose two surface points")
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--x", type=_coeffs, required=True)
    p.add_argument("--y", type=_coeffs, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_compose)

    p = subs.add_parser("decompose", help="composition table and decomposition report")
    p.add_argument("--points", required=True)
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--max-generations", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = subs.add_parser("verify-relations", help="randomized identity suites")
    p.add_argument("--coeffs", type=_coeffs, default=(1, 2, 3, 4))
    p.add_argument("--height", type=int, default=200)
    p.add_argument("--trials", type=int, default=2000)
    _add_common(p)
    p.set_defaults(func=cmd_verify_relations)

    p = subs.add_parser("split-demo", help="blow-up model and claim-1 suite")
    p.add_argument("--field", type=_field, default=_field("fp:101"))
    p.add_argument("--base", default="default", help="'default' or six ;-separated triples")
    p.add_argument("--samples", type=int, default=100)
    _add_common(p)
    p.set_defaults(func=cmd_split_demo)

    p = subs.add_parser("plane-closure", help="projective-plane closure of seeds")
    p.add_argument("--field", type=_field, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--extra", default=None, help="extra seed as comma triple")
    p.add_argument("--max-generations", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_plane_closure)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CubicError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
