"""Newton polytopes and the regular subdivisions induced by coefficient lifts.

Each support point omega of a tropical polynomial is lifted to height
sign * a_omega; the lower convex hull of the lifted points projects to a
polyhedral subdivision of the Newton polytope.  With the default sign +1
a node is a 0-cell of the subdivision exactly when its lifted copy dips
strictly below the hull of the others, and flipping the sign swaps the
roles of "large" and "small" coefficients.

Planar supports (1 or 2 variables) get the full cell complex.  Symmetric
quadric supports in 3 or more variables get the 0-cell data only: every
non-corner node of twice the standard simplex is the midpoint of exactly
one boundary edge, and the subdivision restricted to a boundary edge
depends only on the lifted points of that edge, so a midpoint appears iff
it dips below the chord of its two edge endpoints.  That keeps the check
exact in every dimension without enumerating hulls.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .errors import UnsupportedShapeError
from .polynomial import Exponent, TropPolynomial

Plane = Tuple[Fraction, Fraction, Fraction]  # h = p1*x + p2*y + q over the support


@dataclass(frozen=True)
class NewtonPolytope:
    nvars: int
    dim: int
    vertices: Tuple[Exponent, ...]
    lattice_nodes: Tuple[Exponent, ...]


@dataclass(frozen=True)
class LiftedPoints:
    points: Tuple[Exponent, ...]
    heights: Tuple[Fraction, ...]
    sign: int


@dataclass(frozen=True)
class Cell:
    """A top-dimensional cell: all support points on one lower-hull facet.

    `corners` are the 0-cells on the cell boundary (counterclockwise for
    planar facets); `points` may additionally contain support points lying
    on the facet without being corners.  `plane` is the facet's affine
    support function for planar full-dimensional subdivisions, None
    otherwise.
    """

    points: Tuple[Exponent, ...]
    corners: Tuple[Exponent, ...]
    plane: Optional[Plane]


@dataclass(frozen=True)
class Face1:
    """A 1-face of a planar subdivision with its incident top cells."""

    points: Tuple[Exponent, ...]
    ends: Tuple[Exponent, Exponent]
    cells: Tuple[int, ...]
    boundary: bool


@dataclass(frozen=True)
class Subdivision:
    polytope: NewtonPolytope
    lifted: LiftedPoints
    cells: Optional[Tuple[Cell, ...]]
    edges: Optional[Tuple[Face1, ...]]
    appearing: Tuple[Exponent, ...]

    @property
    def sign(self) -> int:
        return self.lifted.sign

    @property
    def dim(self) -> int:
        return self.polytope.dim


def _cross(o: Exponent, a: Exponent, b: Exponent) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _primitive(v: Tuple[int, ...]) -> Tuple[int, ...]:
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(c // g for c in v)


def _hull2d(points: List[Exponent]) -> List[Exponent]:
    """Strict convex hull corners, counterclockwise from the lexicographic
    minimum.  Collinear input degenerates to [start] or [start, end]."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def chain(seq: List[Exponent]) -> List[Exponent]:
        out: List[Exponent] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _on_segment(a: Exponent, b: Exponent, p: Exponent) -> bool:
    if _cross(a, b, p) != 0:
        return False
    dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
    length2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return 0 <= dot <= length2


def _planar_dim(pts: List[Exponent]) -> int:
    if len(pts) == 1:
        return 0
    base = pts[0]
    direction = None
    for p in pts[1:]:
        if direction is None:
            direction = (p[0] - base[0], p[1] - base[1])
        elif _cross(base, (base[0] + direction[0], base[1] + direction[1]), p) != 0:
            return 2
    return 1


def _quadric_corners(nvars: int) -> List[Exponent]:
    corners: List[Exponent] = [tuple(0 for _ in range(nvars))]
    for i in range(nvars):
        corners.append(tuple(2 if k == i else 0 for k in range(nvars)))
    return sorted(corners)


def _quadric_nodes(nvars: int) -> List[Exponent]:
    nodes: List[Exponent] = list(_quadric_corners(nvars))
    for i in range(nvars):
        nodes.append(tuple(1 if k == i else 0 for k in range(nvars)))
        for j in range(i + 1, nvars):
            nodes.append(tuple(1 if k in (i, j) else 0 for k in range(nvars)))
    return sorted(nodes)


def _midpoint_edge_ends(m: Exponent) -> Tuple[Exponent, Exponent]:
    """The unique polytope edge of twice-the-simplex having m as midpoint."""
    n = len(m)
    ones = [i for i, e in enumerate(m) if e == 1]
    if len(ones) == 2:
        i, j = ones
        return (
            tuple(2 if k == i else 0 for k in range(n)),
            tuple(2 if k == j else 0 for k in range(n)),
        )
    if len(ones) == 1:
        i = ones[0]
        return (tuple(2 if k == i else 0 for k in range(n)), tuple(0 for _ in range(n)))
    raise ValueError(f"{m!r} is not a non-corner node of twice the simplex")


def newton_polytope(F: TropPolynomial) -> NewtonPolytope:
    """Convex hull data of the support.

    One and two variables: any support is accepted and the hull is computed
    geometrically.  Three or more variables: only symmetric quadric supports
    (exponents within twice the standard simplex, all square and constant
    slots present) are accepted.
    """
    if F.nvars >= 3:
        corners = _quadric_corners(F.nvars)
        support = set(F.support())
        for exp in support:
            if any(e < 0 for e in exp) or sum(exp) > 2:
                raise UnsupportedShapeError(
                    f"supports in {F.nvars} variables must lie in twice the standard simplex; got {exp}"
                )
        missing = [c for c in corners if c not in support]
        if missing:
            raise UnsupportedShapeError(
                f"quadric supports in {F.nvars} variables need every square and constant slot finite; "
                f"missing {missing[0]}"
            )
        return NewtonPolytope(
            nvars=F.nvars,
            dim=F.nvars,
            vertices=tuple(corners),
            lattice_nodes=tuple(_quadric_nodes(F.nvars)),
        )

    if F.nvars == 1:
        ks = sorted(e[0] for e in F.support())
        lo, hi = ks[0], ks[-1]
        if lo == hi:
            return NewtonPolytope(1, 0, ((lo,),), ((lo,),))
        return NewtonPolytope(1, 1, ((lo,), (hi,)), tuple((k,) for k in range(lo, hi + 1)))

    pts = sorted(F.support())
    dim = _planar_dim(pts)
    if dim == 0:
        return NewtonPolytope(2, 0, tuple(pts), tuple(pts))
    if dim == 1:
        base, end = pts[0], pts[-1]
        step = _primitive((end[0] - base[0], end[1] - base[1]))
        count = (end[0] - base[0]) // step[0] if step[0] else (end[1] - base[1]) // step[1]
        nodes = tuple((base[0] + t * step[0], base[1] + t * step[1]) for t in range(count + 1))
        return NewtonPolytope(2, 1, (base, end), nodes)

    hull = _hull2d(pts)
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    nodes: List[Exponent] = []
    m = len(hull)
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if all(_cross(hull[i], hull[(i + 1) % m], p) >= 0 for i in range(m)):
                nodes.append(p)
    return NewtonPolytope(2, 2, tuple(hull), tuple(sorted(nodes)))


def lift_points(F: TropPolynomial, sign: int = 1) -> LiftedPoints:
    """Heights sign * a_omega over the support, in support order."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    pts = F.support()
    heights = tuple(sign * F.terms[p].finite for p in pts)
    return LiftedPoints(points=pts, heights=heights, sign=sign)


def _planar_full_dim_cells(pts: List[Exponent], height: Dict[Exponent, Fraction]) -> List[Cell]:
    n = len(pts)
    facets: Dict[Plane, Tuple[Exponent, ...]] = {}
    for i in range(n):
        xi, yi = pts[i]
        hi = height[pts[i]]
        for j in range(i + 1, n):
            xj, yj = pts[j]
            hj = height[pts[j]]
            for k in range(j + 1, n):
                xk, yk = pts[k]
                cr = (xj - xi) * (yk - yi) - (yj - yi) * (xk - xi)
                if cr == 0:
                    continue
                hk = height[pts[k]]
                # heights are Fractions, so both quotients stay exact
                p1 = ((hj - hi) * (yk - yi) - (hk - hi) * (yj - yi)) / cr
                p2 = ((hk - hi) * (xj - xi) - (hj - hi) * (xk - xi)) / cr
                q = hi - p1 * xi - p2 * yi
                key = (p1, p2, q)
                if key in facets:
                    continue
                onset: List[Exponent] = []
                valid = True
                for p in pts:
                    val = p1 * p[0] + p2 * p[1] + q
                    h = height[p]
                    if h < val:
                        valid = False
                        break
                    if h == val:
                        onset.append(p)
                if valid:
                    facets[key] = tuple(sorted(onset))
    cells = [
        Cell(points=onset, corners=tuple(_hull2d(list(onset))), plane=key)
        for key, onset in facets.items()
    ]
    cells.sort(key=lambda c: c.points)
    return cells


def _planar_faces(cells: List[Cell]) -> List[Face1]:
    acc: Dict[Tuple[Exponent, Exponent], Dict] = {}
    for ci, cell in enumerate(cells):
        m = len(cell.corners)
        for a in range(m):
            va, vb = cell.corners[a], cell.corners[(a + 1) % m]
            key = (va, vb) if va < vb else (vb, va)
            rec = acc.setdefault(
                key,
                {"points": tuple(sorted(p for p in cell.points if _on_segment(va, vb, p))), "cells": []},
            )
            rec["cells"].append(ci)
    return [
        Face1(points=rec["points"], ends=key, cells=tuple(sorted(rec["cells"])), boundary=len(rec["cells"]) == 1)
        for key, rec in sorted(acc.items())
    ]


def _segment_cells(pts: List[Exponent], height: Dict[Exponent, Fraction]) -> List[Cell]:
    base = pts[0]
    step = _primitive(tuple(e - b for e, b in zip(pts[-1], base)))

    def param(p: Exponent) -> int:
        for s, d in zip(step, (e - b for e, b in zip(p, base))):
            if s:
                return d // s
        raise ValueError("degenerate segment")

    order = sorted(pts, key=param)
    lifted = [(param(p), height[p], p) for p in order]
    chain: List[Tuple[int, Fraction, Exponent]] = []
    for item in lifted:
        while len(chain) >= 2:
            (t1, h1, _), (t2, h2, _) = chain[-2], chain[-1]
            t3, h3, _ = item
            if (t2 - t1) * (h3 - h1) - (h2 - h1) * (t3 - t1) <= 0:
                chain.pop()
            else:
                break
        chain.append(item)
    cells: List[Cell] = []
    for (ta, ha, pa), (tb, hb, pb) in zip(chain, chain[1:]):
        on_chord = [
            p
            for (t, h, p) in lifted
            if ta <= t <= tb and (h - ha) * (tb - ta) == (hb - ha) * (t - ta)
        ]
        cells.append(Cell(points=tuple(sorted(on_chord)), corners=(pa, pb), plane=None))
    return cells


def induced_subdivision(F: TropPolynomial, sign: int = 1) -> Subdivision:
    """The regular subdivision of the Newton polytope induced by the lift.

    Planar supports carry the full complex (cells, 1-faces, 0-cells);
    higher-dimensional quadric supports carry the 0-cell data with
    cells=None and edges=None.
    """
    polytope = newton_polytope(F)
    lifted = lift_points(F, sign)
    height = {p: h for p, h in zip(lifted.points, lifted.heights)}

    if F.nvars >= 3:
        appearing = set(polytope.vertices)
        for m in lifted.points:
            if m in appearing or sum(m) == 0:
                continue
            a, b = _midpoint_edge_ends(m)
            if 2 * height[m] < height[a] + height[b]:
                appearing.add(m)
        return Subdivision(polytope, lifted, None, None, tuple(sorted(appearing)))

    pts = [p if len(p) == 2 else (p[0], 0) for p in lifted.points]
    if F.nvars == 1:
        height = {(p[0], 0): h for p, h in zip(lifted.points, lifted.heights)}

    if polytope.dim == 0:
        cell = Cell(points=lifted.points, corners=lifted.points, plane=None)
        return Subdivision(polytope, lifted, (cell,), (), lifted.points)

    if polytope.dim == 1:
        cells2d = _segment_cells(pts, height)
        if F.nvars == 1:
            cells = tuple(
                Cell(
                    points=tuple((x,) for x, _ in c.points),
                    corners=tuple((x,) for x, _ in c.corners),
                    plane=None,
                )
                for c in cells2d
            )
        else:
            cells = tuple(cells2d)
        appearing = sorted({c for cell in cells for c in cell.corners})
        return Subdivision(polytope, lifted, cells, (), tuple(appearing))

    cells = tuple(_planar_full_dim_cells(pts, height))
    edges = tuple(_planar_faces(list(cells)))
    appearing = sorted({c for cell in cells for c in cell.corners})
    return Subdivision(polytope, lifted, cells, edges, tuple(appearing))


def node_classification(S: Subdivision) -> str:
    """'maximal_in_nodes' when every lattice node of the polytope is a
    0-cell, 'minimal_in_nodes' when only the polytope corners are,
    'neither' otherwise.  When the two coincide (no non-corner nodes)
    'maximal_in_nodes' is reported."""
    app = set(S.appearing)
    if app == set(S.polytope.lattice_nodes):
        return "maximal_in_nodes"
    if app == set(S.polytope.vertices):
        return "minimal_in_nodes"
    return "neither"


def is_complete(S: Subdivision) -> bool:
    """True when the subdivision is as fine as a lattice complex can be:
    unimodular triangles for 2-dimensional supports, primitive segments for
    1-dimensional ones.  Needs the explicit planar complex."""
    if S.cells is None:
        raise UnsupportedShapeError("completeness is only computed for planar supports")
    if S.dim == 0:
        return True
    if S.dim == 1:
        # as fine as possible on a segment: every cell is a primitive step
        for cell in S.cells:
            if len(cell.points) != 2:
                return False
            a, b = cell.corners
            g = 0
            for x, y in zip(a, b):
                g = gcd(g, abs(x - y))
            if g != 1:
                return False
        return True
    for cell in S.cells:
        if len(cell.corners) != 3 or len(cell.points) != 3:
            return False
        a, b, c = cell.corners
        if abs(_cross(a, b, c)) != 1:
            return False
    return True
