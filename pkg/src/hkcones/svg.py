"""Deterministic SVG pictures of rank-2 stability fans.

Rays are placed in "light-cone" coordinates: the ample class points
straight up and the boundary of the positive cone sits at 45 degrees on
either side.  The vertical coordinate of a class ``v`` is ``q(v, A)``
scaled by ``1/sqrt(q(A))``; the horizontal one is fixed by ``q(v)``, with
the sign taken from the exact orientation of ``v`` against ``A``.  So the
left/right order on the page is decided exactly; only the final pixel
positions use floating point, computed from 64-bit rational
approximations and printed with two decimals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cmp_to_key

from hkcones.cones import ccw
from hkcones.errors import RankUnsupported
from hkcones.scalar import as_scalar, rational_approx, sign

__all__ = ["fan_svg", "format_class"]

WIDTH = 960
HEIGHT = 380
CX, CY = 340, 340
RADIUS = 250
LABEL_RADIUS = 262
LEGEND_X = 660
PALETTE = ("#e8e8e8", "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffff99", "#1f78b4", "#33a02c")


def format_class(basis, vec):
    """Human form such as ``3H-2delta``; irrational coefficients are parenthesized."""
    parts = []
    for name, c in zip(basis, vec):
        c = as_scalar(c)
        if sign(c) == 0:
            continue
        if isinstance(c, Fraction):
            mag = abs(c)
            coeff = "" if mag == 1 else str(mag)
            parts.append(("-" if c < 0 else "+", coeff + name))
        else:
            parts.append(("+", f"({c}){name}"))
    if not parts:
        return "0"
    text = "".join(s + t for s, t in parts)
    return text[1:] if text.startswith("+") else text


def _angle(model, v):
    """Angle from the ample direction, positive counterclockwise."""
    a = model.ample
    qa = float(rational_approx(model.q(a)))
    t = float(rational_approx(model.q(v, a))) / math.sqrt(qa)
    s2 = max(t * t - float(rational_approx(model.q(v))), 0.0)
    side = ccw(a, v)
    return math.atan2(side * math.sqrt(s2), t)


def _point(phi, r):
    return CX - r * math.sin(phi), CY - r * math.cos(phi)


def _xy(p):
    return f"{p[0]:.2f},{p[1]:.2f}"


def _esc(text):
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def fan_svg(model, chambers, title=None):
    """SVG text for a list of stability chambers (an empty list draws the axes only)."""
    if model.rank != 2:
        raise RankUnsupported(f"fan diagrams need rank 2, got rank {model.rank}")
    title = title if title is not None else model.name
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="10" y="20" font-family="sans-serif" font-size="14">{_esc(title)}</text>',
        '<g id="axes" stroke="#999999" stroke-width="1">',
        f'<line x1="{CX - RADIUS}" y1="{CY}" x2="{CX + RADIUS}" y2="{CY}"/>',
        f'<line x1="{CX}" y1="{CY}" x2="{CX}" y2="{CY - RADIUS}"/>',
        "</g>",
    ]
    rays = {}
    out.append('<g id="chambers" stroke="none">')
    for i, ch in enumerate(chambers):
        fill = PALETTE[i % len(PALETTE)]
        for s in ch.sectors:
            rays.setdefault(s.lo, None)
            rays.setdefault(s.hi, None)
            if s.lo == s.hi:
                continue
            p0 = _point(_angle(model, s.lo.direction), RADIUS)
            p1 = _point(_angle(model, s.hi.direction), RADIUS)
            out.append(
                f'<path d="M {CX},{CY} L {_xy(p0)} A {RADIUS},{RADIUS} 0 0 0 {_xy(p1)} Z" '
                f'fill="{fill}" fill-opacity="0.8" data-chamber="{_esc(ch.name)}"/>'
            )
    out.append("</g>")
    out.append('<g id="rays" stroke="#000000" stroke-width="1.2" font-family="sans-serif" font-size="10">')
    # exact order, most counterclockwise first
    ordered = sorted(rays, key=cmp_to_key(lambda u, v: ccw(u, v)))
    for r in ordered:
        phi = _angle(model, r.direction)
        p = _point(phi, RADIUS)
        q = _point(phi, LABEL_RADIUS)
        anchor = "middle" if abs(phi) < 0.2 else ("end" if phi > 0 else "start")
        out.append(f'<line x1="{CX}" y1="{CY}" x2="{p[0]:.2f}" y2="{p[1]:.2f}"/>')
        label = _esc(format_class(model.basis, r.direction))
        out.append(f'<text x="{q[0]:.2f}" y="{q[1]:.2f}" stroke="none" text-anchor="{anchor}">{label}</text>')
    out.append("</g>")
    out.append('<g id="legend" font-family="sans-serif" font-size="11">')
    for i, ch in enumerate(chambers):
        y = 40 + 18 * i
        fill = PALETTE[i % len(PALETTE)]
        comps = ", ".join(f"{c.label} (dim {c.dim})" for c in ch.components) or "empty"
        out.append(f'<rect x="{LEGEND_X}" y="{y - 10}" width="12" height="12" fill="{fill}" stroke="#000000"/>')
        out.append(f'<text x="{LEGEND_X + 18}" y="{y}">{_esc(ch.name)}: {_esc(comps)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
