"""SVG figures of successor diagrams.

Coordinates are converted to floats here and nowhere else.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .rational import RatPoint, format_point
from .successor import Diagram, SuccessorStep

_SIZE = 480
_PAD = 40


def _viewport(points: Sequence[RatPoint]):
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    k = (_SIZE - 2 * _PAD) / span

    def to_px(p: RatPoint):
        # flip y so the figure reads with y up
        return _PAD + (float(p.x) - lo_x) * k, _SIZE - _PAD - (float(p.y) - lo_y) * k
    return to_px


def diagram_svg(d: Diagram, d_prime: Optional[RatPoint] = None,
                orbit: Sequence[RatPoint] = (), title: str = "") -> str:
    pts = list(d.frame) + [d.N] + list(orbit) + ([d_prime] if d_prime is not None else [])
    px = _viewport(pts)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
           f'viewBox="0 0 {_SIZE} {_SIZE}">']
    if title:
        out.append(f"<title>{title}</title>")

    def seg(p, q, colour="#444", dash=""):
        (x1, y1), (x2, y2) = px(p), px(q)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                   f'stroke="{colour}" stroke-width="1.5"{extra}/>')

    def dot(p, label, colour="#000"):
        x, y = px(p)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3.5" fill="{colour}"/>')
        out.append(f'<text x="{x + 6:.3f}" y="{y - 6:.3f}" font-family="sans-serif" '
                   f'font-size="13" fill="{colour}">{label}</text>')

    seg(d.A, d.C)
    seg(d.C, d.D)
    seg(d.A, d.D)
    seg(d.A, d.zero)
    if d_prime is not None:
        seg(d.C, d.N, "#2a6", "4 3")
        seg(d.B, d_prime, "#c33", "4 3")
        dot(d_prime, "D'", "#c33")
    for i, p in enumerate(orbit):
        if p != d.zero and p != d.N:
            dot(p, str(i), "#888")
    for name in ("A", "B", "C", "D"):
        dot(getattr(d, name), name)
    dot(d.zero, "0")
    if d.N != d.zero:
        dot(d.N, "N", "#26c")
    out.append(f'<text x="8" y="{_SIZE - 8}" font-family="monospace" font-size="11">'
               f'N = {format_point(d.N)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def step_svg(step: SuccessorStep, n: int) -> str:
    return diagram_svg(step.output, step.d_prime, title=f"successor step {n}")


def orbit_svg(seed: Diagram, steps: Sequence[SuccessorStep]) -> str:
    orbit = [seed.N] + [s.output.N for s in steps]
    last = steps[-1].output if steps else seed
    return diagram_svg(last, orbit=orbit, title=f"{len(steps)} successor steps")
