"""Command-line interface.

Subcommands: ``invariants`` (numerical invariants of a character), ``wall``
(full dossier for a destabilizer pair, with optional trace CSV and SVG),
``enumerate pseudo`` / ``enumerate nu`` (candidate searches), and ``figure``
(render a layered figure from a JSON spec or a named preset).

Exit codes: 0 success, 2 input or domain error, 3 internal certification
failure.  Rationals are read and written as exact ``p/q`` text; decimal
input for s is rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .candidates import (SearchBox, Toggles, enumerate_nu_candidates,
                         enumerate_pseudo_walls)
from .chern import (ChernCharacter, HalfPlanePoint, SPoint, dualize,
                    euler_char_p3, q_quartic, q_tilt)
from .geometry import gamma_alpha_sq, tau
from .jsonio import frac_str, jsonable, parse_frac
from .walls import (DegenerateNuWall, NuWall, classify_singularities,
                    classify_wall, horizontal_points, nu_wall, trace_wall,
                    unbounded_asymptote, wall_gamma_crossings,
                    wall_theta_crossings, equivalent_mod_v)

SCHEMA = 1


class CliError(Exception):
    """Input or domain error: exit code 2."""


def _parse_char(text: str) -> ChernCharacter:
    try:
        return ChernCharacter.parse(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _parse_s(text: str) -> Fraction:
    try:
        return parse_frac(text)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise CliError("window must be beta_min,beta_max,alpha_min,alpha_max")
    return tuple(parse_frac(p) for p in parts)


def _emit(doc: dict, out: str | None) -> None:
    payload = json.dumps(doc, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def cmd_invariants(args) -> dict:
    v = _parse_char(args.v)
    if v.is_zero():
        raise CliError("zero character")
    doc = {
        "schema": SCHEMA,
        "command": "invariants",
        "v": str(v),
        "q_tilt": frac_str(q_tilt(v)),
        "q_quartic": frac_str(q_quartic(v)),
        "chi": frac_str(euler_char_p3(v)),
        "dual": str(dualize(v)),
        "lattice": v.in_coarse_lattice(),
        "object_class_p3": v.is_object_class_p3(),
    }
    if v.v0 != 0:
        doc["mu"] = frac_str(v.mu())
        if q_tilt(v) >= 0:
            # hyperbola data: (beta - mu)^2 - alpha^2 = q_tilt / v0^2
            doc["theta_rhs"] = frac_str(q_tilt(v) / v.v0**2)
    return doc


def cmd_wall(args) -> dict:
    u = _parse_char(args.u)
    v = _parse_char(args.v)
    s = _parse_s(args.s)
    window = _parse_window(args.window)
    step = _parse_s(args.step)
    try:
        wc = classify_wall(u, v)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    nw = nu_wall(u, v)
    if isinstance(nw, NuWall):
        nu_doc = {"kind": "circle", "center": frac_str(nw.center),
                  "radius_sq": frac_str(nw.radius_sq), "empty": nw.is_empty}
    else:
        nu_doc = {"kind": "degenerate",
                  "line_beta": None if nw.line_beta is None else frac_str(nw.line_beta),
                  "identically_zero": nw.identically_zero}
    doc = {
        "schema": SCHEMA,
        "command": "wall",
        "u": str(u),
        "v": str(v),
        "s": frac_str(s),
        "class": {"kind": wc.kind.value, "canonical": str(wc.canonical)},
        "nu_wall": nu_doc,
    }
    if v.v0 != 0 and q_tilt(v) >= 0:
        doc["theta_crossings"] = [
            {"beta": frac_str(p.beta), "alpha_sq": frac_str(p.a)}
            for p in wall_theta_crossings(u, v)]
    doc["gamma_crossings"] = [jsonable(c) for c in wall_gamma_crossings(u, v, s)]
    doc["horizontal_points_s_one_third"] = [
        jsonable(h) for h in horizontal_points(u, v)]
    if v.v0 != 0:
        doc["singular_points"] = [jsonable(p) for p in classify_singularities(u, v)]
    from .chern import delta
    if delta(1, 0, u, v) == 0 and delta(2, 0, u, v) != 0 and s != Fraction(1, 3):
        doc["vertical_asymptote"] = frac_str(unbounded_asymptote(u, v, s))
    trace = trace_wall(u, v, s, window=window, step=step, threads=args.threads)
    doc["trace"] = {
        "window": [frac_str(x) for x in window],
        "step": frac_str(step),
        "component_count": trace.component_count,
        "components": [
            {"bounded": c.bounded, "vertices": len(c.vertices)}
            for c in trace.components],
    }
    if args.csv:
        import csv as _csv
        with open(args.csv, "w", newline="") as fh:
            writer = _csv.writer(fh)
            writer.writerow(["component", "beta", "alpha"])
            for idx, comp in enumerate(trace.components):
                for b, _, alpha in comp.vertices:
                    writer.writerow([idx, frac_str(b), repr(alpha)])
    if args.svg:
        from .figures import FigureSpec, render
        spec = {
            "window": [frac_str(x) for x in window],
            "resolution": frac_str(step),
            "title": f"wall of u={u} for v={v} at s={frac_str(s)}",
            "layers": [
                {"kind": "theta", "v": str(v), "role": "theta", "label": "rho = 0"},
                {"kind": "gamma", "v": str(v), "s": frac_str(s), "role": "gamma",
                 "label": "tau = 0"},
                {"kind": "nu_wall", "u": str(u), "v": str(v), "role": "nu",
                 "label": "nu-wall"},
                {"kind": "lambda_wall", "u": str(u), "v": str(v),
                 "s": frac_str(s), "role": "lambda", "label": "lambda-wall"},
            ],
        }
        if v.v0 == 0 or q_tilt(v) < 0:
            spec["layers"] = [l for l in spec["layers"] if l["kind"] != "theta"]
        render(FigureSpec.from_dict(spec), args.svg)
    return doc


def _point_on_curve(v: ChernCharacter, s: Fraction, args) -> HalfPlanePoint:
    beta = _parse_s(args.beta)
    if args.alpha_sq is not None:
        a = _parse_s(args.alpha_sq)
        p = HalfPlanePoint(beta, a)
        if tau(v, SPoint(p, s)) != 0:
            raise CliError("point is not on the tau-curve of v")
        return p
    try:
        a = gamma_alpha_sq(v, s, beta)
    except ZeroDivisionError as exc:
        raise CliError(str(exc)) from exc
    if a is None:
        raise CliError("no point of the tau-curve over this beta (negative height)")
    return HalfPlanePoint(beta, a)


def cmd_enumerate(args) -> dict:
    v = _parse_char(args.v)
    if args.mode == "nu":
        try:
            out = enumerate_nu_candidates(v, rank_max=args.rank_max)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        return {
            "schema": SCHEMA,
            "command": "enumerate-nu",
            "v": str(v),
            "rank_max": args.rank_max,
            "candidates": [
                {"u_trunc": [frac_str(x) for x in c.u_trunc],
                 "center": frac_str(c.wall.center),
                 "radius_sq": frac_str(c.wall.radius_sq)}
                for c in out],
        }
    s = _parse_s(args.s)
    p = _point_on_curve(v, s, args)
    box = None
    if args.rank_max is not None or args.c1_min is not None:
        rank_min = args.rank_min or 1
        rank_max = args.rank_max if args.rank_max is not None else max(1, int(v.v0))
        if args.c1_min is None or args.c1_max is None:
            from .candidates import default_box
            base = default_box(v, p)
            c1_min, c1_max = base.c1_min, base.c1_max
        else:
            c1_min, c1_max = args.c1_min, args.c1_max
        box = SearchBox(rank_min, rank_max, c1_min, c1_max, args.c2_bound)
    toggles = Toggles(bogomolov=not args.no_bogomolov,
                      no_theta_crossing=args.assume_no_nu_walls,
                      lambda_nu=args.lambda_nu)
    try:
        res = enumerate_pseudo_walls(v, s, p, box=box, toggles=toggles,
                                     keep_rejected=args.keep_rejected)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    classes: list = []
    ids = []
    for cand in res.candidates:
        key = cand.coincides_with if cand.coincides_with is not None else len(classes)
        if cand.coincides_with is None:
            classes.append(cand)
            ids.append(len(classes) - 1)
        else:
            root = res.candidates[cand.coincides_with]
            ids.append(ids[res.candidates.index(root)])
    doc = {
        "schema": SCHEMA,
        "command": "enumerate-pseudo",
        "v": str(v),
        "s": frac_str(s),
        "point": {"beta": frac_str(p.beta), "alpha_sq": frac_str(p.a)},
        "distinct_walls": len(classes),
        "candidates": [
            {
                "u": str(c.u),
                "wall_id": ids[i],
                "class": c.wall_class.kind.value if c.wall_class else None,
                "canonical": str(c.wall_class.canonical) if c.wall_class else None,
                "coincides_with": c.coincides_with,
                "diagnostics": {k: {"pass": ok, "value": jsonable(val)}
                                for k, (ok, val) in c.diagnostics.items()},
            }
            for i, c in enumerate(res.candidates)],
        "absorbed": [{"u": str(u), "reason": why} for u, why in res.absorbed],
    }
    if args.keep_rejected:
        doc["rejected"] = [
            {"u": str(c.u),
             "failed": c.failed_constraints,
             "diagnostics": {k: {"pass": ok, "value": jsonable(val)}
                             for k, (ok, val) in c.diagnostics.items()}}
            for c in res.rejected]
    return doc


def cmd_figure(args) -> dict:
    from .figures import FigureSpec, preset, render
    if args.preset:
        data = preset(args.preset)
    else:
        with open(args.spec) as fh:
            data = json.load(fh)
    try:
        spec = FigureSpec.from_dict(data)
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad figure spec: {exc}") from exc
    render(spec, args.out, csv_path=args.csv)
    return {"schema": SCHEMA, "command": "figure", "svg": args.out,
            "csv": args.csv, "layers": len(spec.layers)}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tiltwalls",
                                 description="numerical stability walls for "
                                             "rank-one threefold characters")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker threads for column solves")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="numerical invariants of a character")
    p.add_argument("v", help="character as v0,v1,v2,v3 with rational entries")
    p.add_argument("--out", help="write JSON here instead of stdout")

    p = sub.add_parser("wall", help="dossier for the wall of a pair (u, v)")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--s", required=True, help="exact rational, e.g. 1/3")
    p.add_argument("--window", default="-5,5,0,5")
    p.add_argument("--step", default="1/64")
    p.add_argument("--csv", help="write the trace as component,beta,alpha CSV")
    p.add_argument("--svg", help="render the wall figure here")
    p.add_argument("--out")

    p = sub.add_parser("enumerate", help="destabilizer candidate searches")
    p.add_argument("mode", choices=["pseudo", "nu"])
    p.add_argument("--v", required=True)
    p.add_argument("--s", default="1/3")
    p.add_argument("--beta", help="beta coordinate of the search point")
    p.add_argument("--alpha-sq", dest="alpha_sq",
                   help="alpha^2 of the point; omit with --on-gamma semantics")
    p.add_argument("--on-gamma", action="store_true",
                   help="place the point on the tau-curve over --beta (default)")
    p.add_argument("--rank-min", type=int, dest="rank_min")
    p.add_argument("--rank-max", type=int, dest="rank_max")
    p.add_argument("--c1-min", type=int, dest="c1_min")
    p.add_argument("--c1-max", type=int, dest="c1_max")
    p.add_argument("--c2-bound", type=int, dest="c2_bound", default=60)
    p.add_argument("--no-bogomolov", action="store_true",
                   help="drop the truncated Bogomolov filter")
    p.add_argument("--assume-no-nu-walls", action="store_true",
                   help="caller certifies v has no actual nu-walls; enables "
                        "the no-crossing filter")
    p.add_argument("--lambda-nu", action="store_true",
                   help="special-case bound for v=(2,0,-1,0)")
    p.add_argument("--keep-rejected", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("figure", help="render a layered figure")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--spec", help="JSON figure specification file")
    g.add_argument("--preset", help="ideal-line | ideal-point | "
                                    "null-correlation | regions")
    p.add_argument("--out", required=True, help="SVG output path")
    p.add_argument("--csv", help="also write sampled points as CSV")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "invariants":
            doc = cmd_invariants(args)
        elif args.command == "wall":
            doc = cmd_wall(args)
        elif args.command == "enumerate":
            if args.mode == "pseudo" and args.beta is None:
                raise CliError("enumerate pseudo needs --beta")
            doc = cmd_enumerate(args)
        elif args.command == "figure":
            doc = cmd_figure(args)
        else:  # pragma: no cover
            raise CliError(f"unknown command {args.command}")
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return 3
    _emit(doc, getattr(args, "out", None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
