"""Deterministic SVG rendering of Newton polyhedra.

One panel per polynomial: lattice dots, the shaded polyhedron with its
staircase boundary, the dashed bisectrix t1 = t2, support and vertex
markers, the principal face stroked bold, and the distance point.  Output
is a pure function of the input, byte for byte, so diagrams can be kept
as golden files.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .bipoly import BiPoly
from .newton import (
    FaceKind,
    NewtonPolyhedron,
    distance,
    newton_polyhedron,
    principal_face,
)

UNIT = 40
PAD = 46


def _fmt(v: float | Fraction) -> str:
    return f"{float(v):.2f}"


class _Panel:
    def __init__(self, f: BiPoly, offset_x: int, label: str):
        self.f = f
        self.hull: NewtonPolyhedron = newton_polyhedron(f)
        self.d = distance(self.hull)
        self.face = principal_face(self.hull)
        support_max = max(max(j for j, _ in f.support), max(k for _, k in f.support))
        self.extent = max(support_max, math.ceil(self.d)) + 1
        self.offset_x = offset_x
        self.label = label
        self.side = 2 * PAD + self.extent * UNIT

    def x(self, t1: float | Fraction) -> str:
        return _fmt(self.offset_x + PAD + float(t1) * UNIT)

    def y(self, t2: float | Fraction) -> str:
        return _fmt(PAD + (self.extent - float(t2)) * UNIT)

    def _staircase_points(self) -> list[tuple[float, float]]:
        verts = self.hull.vertices
        pts = [(float(verts[0][0]), float(self.extent))]
        pts.extend((float(j), float(k)) for j, k in verts)
        pts.append((float(self.extent), float(verts[-1][1])))
        return pts

    def render(self) -> list[str]:
        out: list[str] = []
        m = self.extent
        # shaded region: staircase closed off at the panel's far corner
        stairs = self._staircase_points()
        region = " ".join(f"{self.x(a)},{self.y(b)}" for a, b in stairs)
        region += f" {self.x(m)},{self.y(m)}"
        out.append(f'<polygon points="{region}" fill="#dce8f5" stroke="none"/>')
        # lattice and axes
        for i in range(m + 1):
            for j in range(m + 1):
                out.append(
                    f'<circle cx="{self.x(i)}" cy="{self.y(j)}" r="1.5" fill="#c9c9c9"/>'
                )
        out.append(
            f'<line x1="{self.x(0)}" y1="{self.y(0)}" x2="{self.x(m)}" '
            f'y2="{self.y(0)}" stroke="#444444" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{self.x(0)}" y1="{self.y(0)}" x2="{self.x(0)}" '
            f'y2="{self.y(m)}" stroke="#444444" stroke-width="1"/>'
        )
        # bisectrix
        out.append(
            f'<line x1="{self.x(0)}" y1="{self.y(0)}" x2="{self.x(m)}" '
            f'y2="{self.y(m)}" stroke="#888888" stroke-width="1" '
            'stroke-dasharray="5 4"/>'
        )
        # boundary staircase
        path = " ".join(f"{self.x(a)},{self.y(b)}" for a, b in stairs)
        out.append(
            f'<polyline points="{path}" fill="none" stroke="#333333" '
            'stroke-width="2"/>'
        )
        # principal face, bold
        kind = self.face.kind
        if kind is FaceKind.VERTEX:
            (j, k) = self.face.points[0]
            out.append(
                f'<circle cx="{self.x(j)}" cy="{self.y(k)}" r="7" fill="none" '
                'stroke="#c0392b" stroke-width="3.5"/>'
            )
        else:
            if kind is FaceKind.COMPACT_EDGE:
                (j1, k1), (j2, k2) = self.face.points
            elif kind is FaceKind.HORIZONTAL_HALFLINE:
                (j1, k1) = self.face.points[0]
                (j2, k2) = (m, k1)
            else:
                (j1, k1) = self.face.points[0]
                (j2, k2) = (j1, m)
            out.append(
                f'<line x1="{self.x(j1)}" y1="{self.y(k1)}" x2="{self.x(j2)}" '
                f'y2="{self.y(k2)}" stroke="#c0392b" stroke-width="4" '
                'stroke-linecap="round"/>'
            )
        # support and vertices
        for j, k in sorted(self.f.support):
            out.append(
                f'<circle cx="{self.x(j)}" cy="{self.y(k)}" r="3.5" fill="#20639b"/>'
            )
        for j, k in self.hull.vertices:
            out.append(
                f'<circle cx="{self.x(j)}" cy="{self.y(k)}" r="4.5" fill="#ffffff" '
                'stroke="#20639b" stroke-width="2"/>'
            )
        # distance point and caption
        out.append(
            f'<circle cx="{self.x(self.d)}" cy="{self.y(self.d)}" r="4" '
            'fill="#c0392b"/>'
        )
        caption = f"{self.label}: d = {self.d}"
        out.append(
            f'<text x="{self.x(0)}" y="{_fmt(self.side - 12)}" '
            f'font-family="monospace" font-size="14" fill="#222222">{caption}</text>'
        )
        return out


def render_svg(f: BiPoly, adapted: BiPoly | None = None) -> str:
    """SVG for f's Newton polyhedron, plus a second panel when a
    post-adaptation polynomial is supplied."""
    panels = [_Panel(f, 0, "input")]
    if adapted is not None:
        panels.append(_Panel(adapted, panels[0].side, "adapted"))
    width = sum(p.side for p in panels)
    height = max(p.side for p in panels)
    body: list[str] = []
    for p in panels:
        body.extend(p.render())
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    )
    background = f'<rect width="{width}" height="{height}" fill="#ffffff"/>'
    return "\n".join([head, background, *body, "</svg>"]) + "\n"
