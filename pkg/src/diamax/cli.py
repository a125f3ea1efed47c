"""Command line: ``diamax compute``, ``diamax verify`` and ``diamax render``.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 precondition error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import completion, metrics
from .geometry import GeometryError, PreconditionError
from .io import (InputError, body_to_json, centers_to_json, diameter_to_json, dumps,
                 load_body, load_json, norm_from_json, trace_to_json)
from .norms import adapt
from .scalar import fmt

QUANTITIES = (
    "diameter", "radius", "self-radius", "inner-radius", "ball-intersection", "ball-hull",
    "complete", "is-complete", "unique-completion", "centers", "hausdorff", "spread",
)
RENDER_LAYERS = ("ball-intersection", "ball-hull", "centers", "completion")


def parse_norm(spec: str, k: int):
    if spec in ("max", "sum"):
        return norm_from_json(spec)
    if spec == "euclidean":
        return norm_from_json({"type": "euclidean", "k": k})
    if spec.lstrip().startswith("{"):
        try:
            data = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad norm JSON: {exc}") from None
    else:
        data = load_json(spec)
    if isinstance(data, dict) and data.get("type") == "euclidean":
        data.setdefault("k", k)
    return norm_from_json(data)


def _value(x):
    return {"value": x if isinstance(x, bool) else fmt(x)}


def _tol(args, n):
    return None if n.exact else args.tol


def compute(args) -> dict:
    n = parse_norm(args.norm, args.k)
    D = adapt(load_body(args.body), n)
    q = args.quantity
    if q == "diameter":
        return diameter_to_json(metrics.diameter(D, n))
    if q == "radius":
        return _value(metrics.chebyshev(D, n).radius)
    if q == "self-radius":
        return _value(metrics.self_radius(D, n))
    if q == "inner-radius":
        return _value(metrics.inner_radius(D, n))
    if q == "ball-intersection":
        return body_to_json(completion.ball_intersection(D, n))
    if q == "ball-hull":
        return body_to_json(completion.ball_hull(D, n))
    if q == "centers":
        return centers_to_json(metrics.chebyshev(D, n))
    if q == "is-complete":
        return _value(completion.is_complete(D, n, _tol(args, n)))
    if q == "unique-completion":
        return _value(completion.has_unique_completion(D, n, _tol(args, n)))
    if q == "complete":
        within = None
        if args.within_center is not None or args.within_radius is not None:
            if args.within_center is None or args.within_radius is None:
                raise InputError("--within-center and --within-radius go together")
            within = (_parse_point(args.within_center, n), _parse_scalar(args.within_radius, n))
        strategy = "random" if args.seed is not None else "farthest"
        tr = completion.complete_one(D, n, strategy, args.seed, within=within,
                                     max_iter=args.max_iter, tol=_tol(args, n))
        return trace_to_json(tr)
    if q == "hausdorff":
        if not args.other:
            raise InputError("hausdorff needs --other BODY")
        return _value(metrics.hausdorff(D, adapt(load_body(args.other), n), n))
    if q == "spread":
        value = completion.completion_spread(D, n, args.samples, args.seed or 0)
        return {**_value(value), "samples": args.samples, "lower_bound": True}
    raise InputError(f"unknown quantity {q!r}")


def _parse_scalar(text, n):
    from fractions import Fraction
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad number {text!r}") from None
    return x if n.exact else float(x)


def _parse_point(text, n):
    return tuple(_parse_scalar(c, n) for c in text.split(","))


def verify(args) -> tuple[int, str]:
    if args.suite == "examples":
        from .harness.registry import example_ids, report_to_json, run_example

        ids = args.only or example_ids(include_skipped=True)
        try:
            reports = [run_example(i) for i in ids]
        except KeyError as exc:
            raise InputError(str(exc)) from None
        ok = all(r.passed for r in reports)
        if args.json:
            return (0 if ok else 1), dumps({"passed": ok, "examples": [report_to_json(r) for r in reports]})
        lines = []
        for r in reports:
            if r.skipped:
                lines.append(f"{r.id:<5} SKIPPED ({r.skipped})")
                continue
            lines.append(f"{r.id:<5} {'PASS' if r.passed else 'FAIL'}  {r.title}")
            for f in r.results:
                mark = "ok  " if f.passed else "FAIL"
                got = f.error or _show(f.computed)
                lines.append(f"      {mark} [{f.provenance}] {f.name}: expected {_show(f.expected)}, got {got}")
        return (0 if ok else 1), "\n".join(lines)

    from .harness.properties import PropertyConfig, report_to_json, run_properties

    try:
        dims = tuple(int(d) for d in args.dims.split(","))
    except ValueError:
        raise InputError(f"bad --dims {args.dims!r}") from None
    norms = tuple(args.norms.split(","))
    if any(d not in (2, 3) for d in dims) or any(x not in ("max", "sum", "gauge") for x in norms):
        raise InputError("--dims must be from {2,3} and --norms from {max,sum,gauge}")
    cfg = PropertyConfig(seed=args.seed, trials=args.trials, dims=dims, norms=norms,
                         only=tuple(args.only) if args.only else None)
    try:
        rep = run_properties(cfg)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc)) from None
    code = 0 if rep.passed else 1
    if args.json:
        return code, dumps(report_to_json(rep))
    text = rep.table()
    for name, s in rep.stats.items():
        if s.counterexample:
            text += f"\nfirst counterexample for {name}:\n{dumps(s.counterexample)}"
    return code, text


def _show(x):
    return x if isinstance(x, bool) or x is None else fmt(x)


def render(args) -> None:
    from .render import Scene, to_svg

    n = parse_norm(args.norm, args.k)
    bodies = [adapt(load_body(p), n) for p in args.bodies]
    scene = Scene(norm=n)
    for path, D in zip(args.bodies, bodies):
        scene.add(Path(path).stem, D)
    D = bodies[0]
    for layer in args.show or ():
        if layer == "ball-intersection":
            scene.add("ball intersection", completion.ball_intersection(D, n), dashed=True)
        elif layer == "ball-hull":
            scene.add("ball hull", completion.ball_hull(D, n))
        elif layer == "centers":
            scene.add("centers", metrics.chebyshev(D, n).centers)
        elif layer == "completion":
            scene.add("completion", completion.complete_one(D, n).final, fill=False)
    svg = to_svg(scene)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diamax", description="Complete sets, ball hulls and completions.")
    sub = p.add_subparsers(dest="command", required=True)

    def norm_flags(sp):
        sp.add_argument("--norm", default="max",
                        help="max, sum, euclidean, a norm JSON file or an inline JSON object")
        sp.add_argument("--k", type=int, default=64, help="Euclidean polygon refinement (2k-gon)")

    c = sub.add_parser("compute", help="compute one quantity for a body")
    c.add_argument("quantity", choices=QUANTITIES)
    c.add_argument("body", help="body JSON file")
    norm_flags(c)
    c.add_argument("--tol", type=float, default=None, help="comparison tolerance (Euclidean mode)")
    c.add_argument("--seed", type=int, default=None, help="seed; makes 'complete' use random vertices")
    c.add_argument("--samples", type=int, default=8, help="completions sampled by 'spread'")
    c.add_argument("--other", help="second body for 'hausdorff'")
    c.add_argument("--within-center", help="'complete' inside B(center, r): comma separated coordinates")
    c.add_argument("--within-radius", help="radius r for --within-center")
    c.add_argument("--max-iter", type=int, default=completion.MAX_ITER)

    v = sub.add_parser("verify", help="run the example registry or the property suite")
    v.add_argument("suite", choices=("examples", "properties"))
    v.add_argument("--only", nargs="+", help="example ids or property names")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--dims", default="2,3")
    v.add_argument("--norms", default="max,sum,gauge")
    v.add_argument("--json", action="store_true", help="JSON report instead of a table")

    r = sub.add_parser("render", help="draw planar bodies and derived sets as SVG")
    r.add_argument("bodies", nargs="+", help="body JSON files; derived layers use the first")
    norm_flags(r)
    r.add_argument("--show", action="append", choices=RENDER_LAYERS, help="add a derived layer (repeatable)")
    r.add_argument("--out", help="output file (default: stdout)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            print(dumps(compute(args)))
            return 0
        if args.command == "verify":
            code, text = verify(args)
            print(text)
            return code
        render(args)
        return 0
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except (GeometryError, InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
