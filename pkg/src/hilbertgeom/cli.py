"""Command-line interface.

Exit codes: 0 success or all axioms hold, 1 a meaningful negative (an axiom
fails, no model exists, a property check failed), 2 usage or input error,
3 internal consistency violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from typing import Optional, Sequence

from .axioms import Verdict, check_group_i, check_group_ii_linear, parse_betweenness
from .finder import BoundsError, SearchBounds, find_minimum
from .ordering import OracleFault, order_collinear
from .properties import DEFAULT_SEED, run_suites
from .rational import collinear, format_point, format_rational, parse_point
from .render import orbit_svg, step_svg
from .structures import (
    MalformedStructureError, ModelParseError, bundled_model_path, parse_model, serialize_model,
)
from .successor import (
    DiagramError, InternalConsistencyError, format_diagram, parse_diagram, successor,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

REFERENCE_DIAGRAM = "A=(0,0);B=(1,1);C=(2,2);D=(0,-2);zero=(1,0);N=(1,0)"


class InputError(Exception):
    pass


def _read(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check_model(args) -> int:
    if args.group == "I":
        path = args.file or bundled_model_path("tetrahedron.model")
        try:
            reports = check_group_i(parse_model(_read(path)))
        except (ModelParseError, MalformedStructureError) as exc:
            raise InputError(f"{path}: {exc}") from exc
    else:
        path = args.file or bundled_model_path("three_point_line.between")
        try:
            points, triples = parse_betweenness(_read(path))
            reports = check_group_ii_linear(points, triples)
        except (ModelParseError, MalformedStructureError) as exc:
            raise InputError(f"{path}: {exc}") from exc
    _emit(args, "".join(str(r) + "\n" for r in reports))
    return EXIT_NEGATIVE if any(r.verdict is Verdict.FAILS for r in reports) else EXIT_OK


def cmd_find_min_model(args) -> int:
    try:
        bounds = SearchBounds(args.max_points, args.max_lines, args.max_planes)
    except BoundsError as exc:
        raise InputError(str(exc)) from exc
    outcome = find_minimum(bounds, workers=args.workers)
    buf = io.StringIO()
    buf.write(f"bounds: points<={bounds.max_points} lines<={bounds.max_lines} planes<={bounds.max_planes}\n")
    buf.write(f"satisfiable: {'yes' if outcome.satisfiable else 'no'}\n")
    buf.write(f"structures examined: {outcome.structures_examined}\n")
    buf.write(f"models found (up to isomorphism): {outcome.models_found}\n")
    for i, m in enumerate(outcome.minimal_models, start=1):
        buf.write(f"\n# minimal model {i}: {len(m.points)} points, {len(m.lines)} lines, "
                  f"{len(m.planes)} planes ({m.size} objects)\n")
        buf.write(serialize_model(m))
    _emit(args, buf.getvalue())
    # timing varies between runs; keep stdout reproducible
    print(f"elapsed: {outcome.elapsed:.3f} s", file=sys.stderr)
    return EXIT_OK if outcome.satisfiable else EXIT_NEGATIVE


def cmd_verify_plane(args) -> int:
    results = run_suites(seed=args.seed, samples=args.samples)
    width = max(len(r.name) for r in results)
    lines = [f"seed {args.seed}, exact rational arithmetic",
             f"{'property':<{width}}  {'samples':>8}  {'failures':>8}  status"]
    for r in results:
        lines.append(f"{r.name:<{width}}  {r.samples:>8}  {r.failures:>8}  {'ok' if r.ok else 'FAIL'}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_NEGATIVE


def cmd_successor_trace(args) -> int:
    try:
        d = parse_diagram(args.diagram)
    except DiagramError as exc:
        raise InputError("invalid seed diagram, violated: " + "; ".join(exc.violated)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    steps = []
    cur = d
    for _ in range(args.steps):
        step = successor(cur)     # re-validates every invariant
        steps.append(step)
        cur = step.output
    orbit = [d.N] + [s.output.N for s in steps]

    if args.format == "svg":
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            for n, step in enumerate(steps, start=1):
                with open(os.path.join(args.out, f"step_{n:03d}.svg"), "w", encoding="utf-8") as fh:
                    fh.write(step_svg(step, n))
            with open(os.path.join(args.out, "orbit.svg"), "w", encoding="utf-8") as fh:
                fh.write(orbit_svg(d, steps))
        else:
            sys.stdout.write(orbit_svg(d, steps))
        return EXIT_OK

    buf = io.StringIO()
    if args.format == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "x", "y"])
        for n, p in enumerate(orbit):
            w.writerow([n, format_rational(p.x), format_rational(p.y)])
    else:
        buf.write(f"seed: {format_diagram(d)}\n")
        buf.write(f"n=0 N={format_point(orbit[0])}\n")
        for n, step in enumerate(steps, start=1):
            buf.write(f"n={n} N={format_point(step.output.N)} D'={format_point(step.d_prime)}\n")
    _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_order_points(args) -> int:
    if not args.file:
        raise InputError("order-points needs --file")
    pts = []
    for lineno, raw in enumerate(_read(args.file).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            pts.append(parse_point(line))
        except ValueError as exc:
            raise InputError(f"{args.file}: line {lineno}: {exc}") from exc
    if len(pts) < 2:
        raise InputError("need at least two points")
    if len(set(pts)) != len(pts):
        raise InputError("points must be distinct")
    if any(not collinear(pts[0], pts[1], p) for p in pts[2:]):
        raise InputError("points are not collinear")
    try:
        result = order_collinear(pts)
    except OracleFault as exc:
        raise InternalConsistencyError(str(exc)) from exc
    _emit(args, "".join(format_point(p) + "\n" for p in result.labels))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertgeom",
        description="Finite incidence models, exact order geometry and the geometric successor.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("check-model", help="check a finite model against Group I or linear Group II")
    p.add_argument("--file", help="model file (default: the bundled example for the group)")
    p.add_argument("--group", choices=["I", "II-linear"], default="I")
    add_out(p)
    p.set_defaults(func=cmd_check_model)

    p = sub.add_parser("find-min-model", help="exhaustive search for Group I models within bounds")
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--max-lines", type=int, default=6)
    p.add_argument("--max-planes", type=int, default=4)
    p.add_argument("--workers", type=int, default=1)
    add_out(p)
    p.set_defaults(func=cmd_find_min_model)

    p = sub.add_parser("verify-plane", help="randomized exact checks of Group II in the rational plane")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=_positive, default=1000)
    add_out(p)
    p.set_defaults(func=cmd_verify_plane)

    p = sub.add_parser("successor-trace", help="iterate the geometric successor")
    p.add_argument("--diagram", default=REFERENCE_DIAGRAM)
    p.add_argument("--steps", type=_nonnegative, default=10)
    p.add_argument("--format", choices=["text", "csv", "svg"], default="text")
    add_out(p)
    p.set_defaults(func=cmd_successor_trace)

    p = sub.add_parser("order-points", help="order collinear points by betweenness")
    p.add_argument("--file", required=True, help="one (x,y) point per line")
    add_out(p)
    p.set_defaults(func=cmd_order_points)
    return parser


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
