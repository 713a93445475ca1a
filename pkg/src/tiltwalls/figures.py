"""Deterministic figure rendering for curves and walls.

Figures carry labeled layers of four kinds: the rho hyperbola (theta, blue),
the tau-vanishing curve (gamma, red), slope-comparison circles (nu, magenta
with purple for seconds), and traced walls (lambda, black with orange for
seconds).  Output is SVG through matplotlib with a pinned hash salt and no
date metadata, so identical inputs produce identical bytes; the sampled
points can be written alongside as CSV.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

from .chern import ChernCharacter
from .geometry import sample_gamma, sample_theta
from .jsonio import frac_str, parse_frac
from .walls import DegenerateNuWall, nu_wall, trace_wall

ROLE_COLORS = {
    "theta": "blue",
    "gamma": "red",
    "nu": "magenta",
    "nu-alt": "purple",
    "lambda": "black",
    "lambda-alt": "orange",
}

DEFAULT_ROLE = {"theta": "theta", "gamma": "gamma",
                "nu_wall": "nu", "lambda_wall": "lambda"}


@dataclass
class Layer:
    kind: str                      # theta | gamma | nu_wall | lambda_wall
    v: ChernCharacter
    u: ChernCharacter | None = None
    s: Fraction | None = None
    role: str = ""
    label: str = ""


@dataclass
class FigureSpec:
    window: tuple[Fraction, Fraction, Fraction, Fraction]
    layers: list[Layer] = field(default_factory=list)
    resolution: Fraction = Fraction(1, 64)
    title: str = ""

    @classmethod
    def from_dict(cls, data: dict) -> "FigureSpec":
        window = tuple(parse_frac(str(x)) for x in data["window"])
        if len(window) != 4:
            raise ValueError("window must be [beta_min, beta_max, alpha_min, alpha_max]")
        layers = []
        for entry in data.get("layers", []):
            kind = entry["kind"]
            if kind not in DEFAULT_ROLE:
                raise ValueError(f"unknown layer kind {kind!r}")
            layer = Layer(
                kind=kind,
                v=ChernCharacter.parse(entry["v"]),
                u=ChernCharacter.parse(entry["u"]) if "u" in entry else None,
                s=parse_frac(str(entry["s"])) if "s" in entry else None,
                role=entry.get("role", DEFAULT_ROLE[kind]),
                label=entry.get("label", ""),
            )
            if kind in ("nu_wall", "lambda_wall") and layer.u is None:
                raise ValueError(f"{kind} layer needs a destabilizer u")
            if kind in ("gamma", "lambda_wall") and layer.s is None:
                raise ValueError(f"{kind} layer needs the parameter s")
            layers.append(layer)
        if not layers:
            raise ValueError("empty layer list")
        res = parse_frac(str(data.get("resolution", "1/64")))
        return cls(window, layers, res, data.get("title", ""))


def _layer_polylines(layer: Layer, spec: FigureSpec) -> list[list[tuple[float, float]]]:
    """Sample one layer into (beta, alpha) polylines."""
    bmin, bmax, _, amax = spec.window
    step = spec.resolution
    a_cap = amax * amax
    if layer.kind == "theta":
        rows = sample_theta(layer.v, bmin, bmax, step, a_max=a_cap)
        by_branch: dict[str, list[tuple[float, float]]] = {}
        for row in rows:
            by_branch.setdefault(row["branch"].value, []).append(
                (float(row["beta"]), sqrt(float(row["a"]))))
        return [pts for _, pts in sorted(by_branch.items())]
    if layer.kind == "gamma":
        rows = sample_gamma(layer.v, layer.s, bmin, bmax, step, a_max=a_cap)
        by_branch = {}
        for row in rows:
            by_branch.setdefault(row["branch"].value, []).append(
                (float(row["beta"]), sqrt(float(row["a"]))))
        return [pts for _, pts in sorted(by_branch.items())]
    if layer.kind == "nu_wall":
        wall = nu_wall(layer.u, layer.v)
        if isinstance(wall, DegenerateNuWall) or wall.is_empty:
            return []
        pts = []
        b = max(bmin, wall.center - _sqrt_frac(wall.radius_sq))
        b_end = min(bmax, wall.center + _sqrt_frac(wall.radius_sq))
        while b <= b_end:
            a = wall.alpha_sq_at(b)
            if a > 0:
                pts.append((float(b), sqrt(float(a))))
            b += step
        return [pts] if pts else []
    trace = trace_wall(layer.u, layer.v, layer.s, window=tuple(spec.window),
                       step=step)
    return [[(float(b), al) for b, _, al in comp.vertices]
            for comp in trace.components]


def _sqrt_frac(x: Fraction) -> Fraction:
    from .exactpoly import rational_sqrt
    return rational_sqrt(x, Fraction(1, 10**6))


def render(spec: FigureSpec, svg_path: str, csv_path: str | None = None) -> None:
    """Write the figure as SVG (and optionally its sampled points as CSV)."""
    import matplotlib
    matplotlib.use("svg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "tiltwalls"
    fig, ax = plt.subplots(figsize=(7, 5))
    csv_rows = []
    for idx, layer in enumerate(spec.layers):
        color = ROLE_COLORS.get(layer.role, "black")
        label = layer.label or f"{layer.kind}[{idx}]"
        shown = False
        for comp_idx, pts in enumerate(_layer_polylines(layer, spec)):
            if not pts:
                continue
            xs, ys = zip(*pts)
            ax.plot(xs, ys, color=color, linewidth=1.2,
                    label=(label if not shown else None))
            shown = True
            for x, y in pts:
                csv_rows.append((label, comp_idx, x, y))
    bmin, bmax, amin, amax = (float(x) for x in spec.window)
    ax.set_xlim(bmin, bmax)
    ax.set_ylim(amin, amax)
    ax.set_xlabel("beta")
    ax.set_ylabel("alpha")
    if spec.title:
        ax.set_title(spec.title)
    ax.legend(loc="upper right", fontsize=8)
    fig.savefig(svg_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["curve", "component", "beta", "alpha"])
            for row in csv_rows:
                writer.writerow(row)


def preset(name: str) -> dict:
    """Built-in figure specifications for the worked examples."""
    if name == "ideal-line":
        return {
            "window": ["-4", "1", "0", "3"],
            "title": "walls for the ideal sheaf of a line",
            "layers": [
                {"kind": "theta", "v": "1,0,-1,1", "role": "theta", "label": "rho = 0"},
                {"kind": "gamma", "v": "1,0,-1,1", "s": "1/3", "role": "gamma", "label": "tau = 0"},
                {"kind": "nu_wall", "u": "1,-1,1/2,-1/6", "v": "1,0,-1,1", "role": "nu", "label": "nu-wall"},
                {"kind": "lambda_wall", "u": "1,-1,1/2,-1/6", "v": "1,0,-1,1", "s": "1/3", "role": "lambda", "label": "lambda-wall"},
            ],
        }
    if name == "ideal-point":
        return {
            "window": ["-4", "0", "0", "2"],
            "title": "walls through the common point for the ideal sheaf of a point",
            "layers": [
                {"kind": "gamma", "v": "1,0,0,-1", "s": "1/3", "role": "gamma", "label": "tau = 0"},
                {"kind": "lambda_wall", "u": "-2,3,-3/2,-1/2", "v": "1,0,0,-1", "s": "1/3", "role": "lambda", "label": "reflexive-kernel wall"},
                {"kind": "lambda_wall", "u": "0,3,-9/2,7/2", "v": "1,0,0,-1", "s": "1/3", "role": "lambda-alt", "label": "complex wall"},
            ],
        }
    if name == "null-correlation":
        return {
            "window": ["-4", "2", "0", "3"],
            "title": "walls for the rank-two character (2,0,-1,0)",
            "layers": [
                {"kind": "theta", "v": "2,0,-1,0", "role": "theta", "label": "rho = 0"},
                {"kind": "gamma", "v": "2,0,-1,0", "s": "1/3", "role": "gamma", "label": "tau = 0"},
                {"kind": "lambda_wall", "u": "1,0,-1,1", "v": "2,0,-1,0", "s": "1/3", "role": "lambda", "label": "ideal-sheaf wall"},
                {"kind": "lambda_wall", "u": "1,-1,1/2,-1/6", "v": "2,0,-1,0", "s": "1/3", "role": "lambda-alt", "label": "line-bundle wall"},
            ],
        }
    if name == "regions":
        return {
            "window": ["-4", "4", "0", "3"],
            "title": "region decomposition for ch = (2,-1,-5/2,0)",
            "layers": [
                {"kind": "theta", "v": "2,-1,-5/2,0", "role": "theta", "label": "rho = 0"},
            ],
        }
    raise ValueError(f"unknown preset {name!r}")
