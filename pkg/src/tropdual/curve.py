"""Planar tropical curves as corner loci, dual to regular subdivisions.

The curve of F under a sign convention is the non-differentiability locus
of x -> max over support of (omega . x - sign * a_omega).  Each facet of
the induced subdivision contributes one curve vertex (the facet's affine
gradient), each interior 1-face one bounded edge, each boundary 1-face one
ray, and for 1-dimensional supports each cell contributes a full line.
Curve pieces are perpendicular to their dual subdivision faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple

from .errors import UnsupportedShapeError
from .polynomial import Exponent, TropPolynomial
from .subdivision import Subdivision, induced_subdivision

QPoint = Tuple[Fraction, Fraction]
IVec = Tuple[int, int]


@dataclass(frozen=True)
class CurveVertex:
    point: QPoint
    dual_cell: int  # index into subdivision.cells


@dataclass(frozen=True)
class CurveEdge:
    a: QPoint
    b: QPoint
    dual_ends: Tuple[Exponent, Exponent]  # endpoints of the dual interior 1-face


@dataclass(frozen=True)
class CurveRay:
    origin: QPoint
    direction: IVec  # primitive, pointing away from the polytope
    dual_ends: Tuple[Exponent, Exponent]


@dataclass(frozen=True)
class CurveLine:
    point: QPoint
    direction: IVec  # primitive
    dual_ends: Tuple[Exponent, Exponent]


@dataclass(frozen=True)
class TropicalCurve:
    subdivision: Subdivision
    vertices: Tuple[CurveVertex, ...]
    edges: Tuple[CurveEdge, ...]
    rays: Tuple[CurveRay, ...]
    lines: Tuple[CurveLine, ...]

    @property
    def sign(self) -> int:
        return self.subdivision.sign


def _primitive2(v: Tuple[int, int]) -> IVec:
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise ValueError("zero vector")
    return (v[0] // g, v[1] // g)


def _canonical_sign(v: IVec) -> IVec:
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return v


def tropical_curve(F: TropPolynomial, sign: int = 1) -> TropicalCurve:
    """Extract the curve dual to the induced subdivision.  Two variables only."""
    if F.nvars != 2:
        raise UnsupportedShapeError("tropical curves are extracted for supports in two variables")
    S = induced_subdivision(F, sign)

    if S.dim == 0:
        # a single monomial is affine everywhere: empty corner locus
        return TropicalCurve(S, (), (), (), ())

    if S.dim == 1:
        height: Dict[Exponent, Fraction] = {p: h for p, h in zip(S.lifted.points, S.lifted.heights)}
        lines: List[CurveLine] = []
        for cell in S.cells:
            pa, pb = cell.corners
            d = (pb[0] - pa[0], pb[1] - pa[1])
            dh = height[pb] - height[pa]
            # tie locus of the two corner terms: d . x = dh
            denom = d[0] * d[0] + d[1] * d[1]
            base = (dh * d[0] / denom, dh * d[1] / denom)
            direction = _canonical_sign(_primitive2((d[1], -d[0])))
            lines.append(CurveLine(point=base, direction=direction, dual_ends=(pa, pb)))
        return TropicalCurve(S, (), (), (), tuple(lines))

    vertices: List[CurveVertex] = []
    vertex_of_cell: Dict[int, QPoint] = {}
    centroid_of_cell: Dict[int, QPoint] = {}
    for ci, cell in enumerate(S.cells):
        p1, p2, _q = cell.plane
        point = (p1, p2)
        vertices.append(CurveVertex(point=point, dual_cell=ci))
        vertex_of_cell[ci] = point
        cs = cell.corners
        centroid_of_cell[ci] = (
            Fraction(sum(c[0] for c in cs), len(cs)),
            Fraction(sum(c[1] for c in cs), len(cs)),
        )

    edges: List[CurveEdge] = []
    rays: List[CurveRay] = []
    for face in S.edges:
        if face.boundary:
            (ci,) = face.cells
            va, vb = face.ends
            d = (vb[0] - va[0], vb[1] - va[1])
            normal = _primitive2((d[1], -d[0]))
            mid = (Fraction(va[0] + vb[0], 2), Fraction(va[1] + vb[1], 2))
            cx, cy = centroid_of_cell[ci]
            if normal[0] * (mid[0] - cx) + normal[1] * (mid[1] - cy) < 0:
                normal = (-normal[0], -normal[1])
            rays.append(CurveRay(origin=vertex_of_cell[ci], direction=normal, dual_ends=face.ends))
        else:
            ca, cb = face.cells
            edges.append(CurveEdge(a=vertex_of_cell[ca], b=vertex_of_cell[cb], dual_ends=face.ends))

    return TropicalCurve(S, tuple(vertices), tuple(edges), tuple(rays), ())
