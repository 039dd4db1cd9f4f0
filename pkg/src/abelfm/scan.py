"""Exact wall scanning over a rational (b, t) grid, with deterministic
CSV, JSON and SVG emission.

For a fixed level k, the wall between a probe class v and a wall class w is
the locus where their level-k charges align over the reals:

    W(b, t) = Re Z(w) * Im Z(v) - Re Z(v) * Im Z(w) = 0.

The scanner evaluates W exactly at every grid point and emits each grid
cell whose corner values show a sign change (two corners of strict opposite
sign, or a zero corner next to a nonzero one).  A wall class proportional
to the probe gives the identically zero polynomial; it is flagged trivial
and contributes no cells.  A probe whose charge vanishes on the whole grid
flags the dataset as degenerate.

The simultaneous quarter-turn in both charges cancels inside W, so the
scanner works with plain truncated integrals; the independent re-check in
recheck_walls goes through the public rotated charge instead, which also
exercises that cancellation.  Grid values are cleared to integers before
the inner loop, so a 200 x 200 scan stays well under the time budget.

Emission is byte-deterministic: fixed orderings, exact "p/q" encodings in
CSV and JSON, fixed float formatting in SVG.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable

from .lattice import AbelianContext, CohClass
from .literals import format_rational_frac
from .stability import ChargeSpec, charge
from .surd import as_fraction


@dataclass(frozen=True)
class ScanRequest:
    """Probe class v, wall classes, level k, rational grid geometry.

    resolution counts grid points per axis (>= 2 each); cells are the
    (nb-1) * (nt-1) little rectangles between adjacent points.  The whole
    t range must be strictly positive."""

    ctx: AbelianContext
    k: int
    v: CohClass
    walls: tuple[CohClass, ...]
    b_range: tuple[Fraction, Fraction]
    t_range: tuple[Fraction, Fraction]
    resolution: tuple[int, int]

    def __post_init__(self):
        if not 1 <= self.k <= self.ctx.g:
            raise ValueError(f"level k must lie in 1..{self.ctx.g}, got {self.k}")
        b0, b1 = (as_fraction(x) for x in self.b_range)
        t0, t1 = (as_fraction(x) for x in self.t_range)
        if not b0 < b1:
            raise ValueError(f"empty b range [{b0}, {b1}]")
        if not t0 < t1:
            raise ValueError(f"empty t range [{t0}, {t1}]")
        if t0 <= 0:
            raise ValueError(f"t range must be strictly positive, starts at {t0}")
        object.__setattr__(self, "b_range", (b0, b1))
        object.__setattr__(self, "t_range", (t0, t1))
        nb, nt = self.resolution
        if not (isinstance(nb, int) and isinstance(nt, int)) or nb < 2 or nt < 2:
            raise ValueError(f"resolution must be >= 2 points per axis, got {self.resolution}")
        if not self.v.ctx.matches(self.ctx):
            raise ValueError("probe class context does not match")
        walls = tuple(self.walls)
        for i, w in enumerate(walls):
            if not w.ctx.matches(self.ctx):
                raise ValueError(f"wall class {i} context does not match")
        if not walls:
            raise ValueError("need at least one wall class")
        object.__setattr__(self, "walls", walls)


@dataclass(frozen=True)
class WallCell:
    """Lower-left corner of a grid cell containing a sign change."""

    w_index: int
    b: Fraction
    t: Fraction


@dataclass(frozen=True)
class WallDataset:
    request: ScanRequest
    cells: tuple[WallCell, ...]
    trivial_walls: tuple[int, ...]
    v_degenerate: bool


def _grid(lo: Fraction, hi: Fraction, count: int) -> list[Fraction]:
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _int_charge_coeffs(cls: CohClass, k: int, scale: int) -> list[int]:
    """Integer coefficients q_m with sum_m q_m * (scale*z)^m equal to a fixed
    positive multiple of the plain truncated integral at z = b + i*t.  The
    per-class positive factor is irrelevant to signs."""
    g = cls.ctx.g
    n = cls.ctx.n
    coeffs = [Fraction(0)] * (g + 1)
    for m in range(g - k, g + 1):
        # scale^(g-m) re-homogenizes after substituting z -> z/scale
        coeffs[m] = n * cls.c[g - m] * (-1) ** m * scale ** (g - m) / factorial(m)
    den = lcm(*(c.denominator for c in coeffs))
    return [int(c * den) for c in coeffs]


def scan_walls(req: ScanRequest) -> WallDataset:
    """Evaluate every wall polynomial exactly on the grid and collect the
    sign-change cells, ordered by wall index, then b, then t."""
    nb, nt = req.resolution
    bs = _grid(req.b_range[0], req.b_range[1], nb)
    ts = _grid(req.t_range[0], req.t_range[1], nt)
    g = req.ctx.g

    # clear all grid denominators with one integer scale
    scale = lcm(*(x.denominator for x in (*bs, *ts)))
    bi = [int(b * scale) for b in bs]
    ti = [int(t * scale) for t in ts]

    classes = [req.v, *req.walls]
    coeffs = [_int_charge_coeffs(cls, req.k, scale) for cls in classes]

    # integer charge values per class and grid point
    values = [[[None] * nt for _ in range(nb)] for _ in classes]
    for x in range(nb):
        zb = bi[x]
        for y in range(nt):
            zt = ti[y]
            # powers of z = zb + i*zt
            pr, pi_ = 1, 0
            pow_r = [1] + [0] * g
            pow_i = [0] * (g + 1)
            for m in range(1, g + 1):
                pr, pi_ = pr * zb - pi_ * zt, pr * zt + pi_ * zb
                pow_r[m] = pr
                pow_i[m] = pi_
            for ci, q in enumerate(coeffs):
                re = 0
                im = 0
                for m in range(g - req.k, g + 1):
                    qm = q[m]
                    if qm:
                        re += qm * pow_r[m]
                        im += qm * pow_i[m]
                values[ci][x][y] = (re, im)

    v_vals = values[0]
    v_degenerate = all(
        v_vals[x][y] == (0, 0) for x in range(nb) for y in range(nt)
    )

    cells: list[WallCell] = []
    trivial: list[int] = []
    for wi in range(len(req.walls)):
        w_vals = values[wi + 1]
        signs = [[0] * nt for _ in range(nb)]
        any_nonzero = False
        for x in range(nb):
            for y in range(nt):
                wr, wim = w_vals[x][y]
                vr, vim = v_vals[x][y]
                val = wr * vim - vr * wim
                if val:
                    any_nonzero = True
                    signs[x][y] = 1 if val > 0 else -1
        if not any_nonzero:
            trivial.append(wi)
            continue
        for x in range(nb - 1):
            col0, col1 = signs[x], signs[x + 1]
            for y in range(nt - 1):
                quad = (col0[y], col1[y], col0[y + 1], col1[y + 1])
                has_pos = 1 in quad
                has_neg = -1 in quad
                has_zero = 0 in quad
                if (has_pos and has_neg) or (has_zero and (has_pos or has_neg)):
                    cells.append(WallCell(wi, bs[x], ts[y]))
    return WallDataset(req, tuple(cells), tuple(trivial), v_degenerate)


def recheck_walls(ds: WallDataset) -> bool:
    """Independent soundness pass: recompute the four corner values of every
    emitted cell through the public exact charge (rotation included) and
    confirm the sign-change predicate.  Returns True when every cell passes."""
    req = ds.request
    nb, nt = req.resolution
    bs = _grid(req.b_range[0], req.b_range[1], nb)
    ts = _grid(req.t_range[0], req.t_range[1], nt)
    b_index = {b: i for i, b in enumerate(bs)}
    t_index = {t: j for j, t in enumerate(ts)}

    def wall_sign(w: CohClass, b: Fraction, t: Fraction) -> int:
        spec = ChargeSpec(req.ctx, req.k, b, t)
        zw = charge(spec, w)
        zv = charge(spec, req.v)
        val = zw.re * zv.im - zv.re * zw.im
        return val.sign()

    for cell in ds.cells:
        x = b_index.get(cell.b)
        y = t_index.get(cell.t)
        if x is None or y is None or x + 1 >= nb or y + 1 >= nt:
            return False
        w = req.walls[cell.w_index]
        quad = [
            wall_sign(w, bs[x], ts[y]),
            wall_sign(w, bs[x + 1], ts[y]),
            wall_sign(w, bs[x], ts[y + 1]),
            wall_sign(w, bs[x + 1], ts[y + 1]),
        ]
        has_pos = 1 in quad
        has_neg = -1 in quad
        has_zero = 0 in quad
        if not ((has_pos and has_neg) or (has_zero and (has_pos or has_neg))):
            return False
    return True


def emit_csv(ds: WallDataset) -> str:
    lines = ["w,b,t"]
    for cell in ds.cells:
        lines.append(
            f"{cell.w_index},{format_rational_frac(cell.b)},{format_rational_frac(cell.t)}"
        )
    return "\n".join(lines) + "\n"


def emit_json(ds: WallDataset) -> str:
    req = ds.request
    record = {
        "k": req.k,
        "g": req.ctx.g,
        "n": format_rational_frac(req.ctx.n),
        "b_range": [format_rational_frac(x) for x in req.b_range],
        "t_range": [format_rational_frac(x) for x in req.t_range],
        "resolution": list(req.resolution),
        "v_degenerate": ds.v_degenerate,
        "trivial_walls": list(ds.trivial_walls),
        "cells": [
            {
                "w": cell.w_index,
                "b": format_rational_frac(cell.b),
                "t": format_rational_frac(cell.t),
            }
            for cell in ds.cells
        ],
    }
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_W, _H = 640.0, 480.0
_ML, _MR, _MT, _MB = 64.0, 24.0, 24.0, 48.0


def _f(x: float) -> str:
    return f"{x:.3f}"


def emit_svg(ds: WallDataset) -> str:
    req = ds.request
    nb, nt = req.resolution
    b0, b1 = (float(x) for x in req.b_range)
    t0, t1 = (float(x) for x in req.t_range)
    cw = (b1 - b0) / (nb - 1)
    ch = (t1 - t0) / (nt - 1)

    def px(b: float) -> float:
        return _ML + (b - b0) / (b1 - b0) * (_W - _ML - _MR)

    def py(t: float) -> float:
        return _H - _MB - (t - t0) / (t1 - t0) * (_H - _MT - _MB)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_W)}" height="{int(_H)}" '
        f'viewBox="0 0 {int(_W)} {int(_H)}">',
        f'<rect x="0" y="0" width="{int(_W)}" height="{int(_H)}" fill="white"/>',
        f'<rect x="{_f(_ML)}" y="{_f(_MT)}" width="{_f(_W - _ML - _MR)}" '
        f'height="{_f(_H - _MT - _MB)}" fill="none" stroke="#444444" stroke-width="1"/>',
    ]
    if b0 < 0 < b1:
        x0 = px(0.0)
        out.append(
            f'<line x1="{_f(x0)}" y1="{_f(_MT)}" x2="{_f(x0)}" y2="{_f(_H - _MB)}" '
            'stroke="#bbbbbb" stroke-width="0.5"/>'
        )
    out.append(
        f'<text x="{_f((_ML + _W - _MR) / 2)}" y="{_f(_H - 12.0)}" '
        'font-family="monospace" font-size="14" text-anchor="middle">b</text>'
    )
    out.append(
        '<text x="16" y="{0}" font-family="monospace" font-size="14" '
        'text-anchor="middle">t</text>'.format(_f((_MT + _H - _MB) / 2))
    )
    for lab, xpos in ((req.b_range[0], _ML), (req.b_range[1], _W - _MR)):
        out.append(
            f'<text x="{_f(xpos)}" y="{_f(_H - _MB + 16.0)}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{lab}</text>'
        )
    for lab, ypos in ((req.t_range[0], _H - _MB), (req.t_range[1], _MT)):
        out.append(
            f'<text x="{_f(_ML - 6.0)}" y="{_f(ypos + 4.0)}" font-family="monospace" '
            f'font-size="11" text-anchor="end">{lab}</text>'
        )
    for wi in range(len(req.walls)):
        color = _PALETTE[wi % len(_PALETTE)]
        out.append(f'<g data-wall="{wi}" fill="{color}" fill-opacity="0.75">')
        for cell in ds.cells:
            if cell.w_index != wi:
                continue
            x = px(float(cell.b))
            y = py(float(cell.t) + ch)
            out.append(
                f'<rect x="{_f(x)}" y="{_f(y)}" '
                f'width="{_f(px(float(cell.b) + cw) - x)}" '
                f'height="{_f(py(float(cell.t)) - y)}"/>'
            )
        out.append("</g>")
        out.append(
            f'<text x="{_f(_W - _MR - 8.0)}" y="{_f(_MT + 16.0 + 14.0 * wi)}" '
            f'font-family="monospace" font-size="12" text-anchor="end" '
            f'fill="{color}">w{wi}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


_EMITTERS = {"csv": emit_csv, "json": emit_json, "svg": emit_svg}

FORMATS = tuple(sorted(_EMITTERS))


def render(ds: WallDataset, fmt: str) -> str:
    try:
        emitter = _EMITTERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}, want one of {FORMATS}") from None
    return emitter(ds)


def emit(ds: WallDataset, fmt: str, path) -> None:
    """Render and write; identical datasets yield byte-identical files."""
    text = render(ds, fmt)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
