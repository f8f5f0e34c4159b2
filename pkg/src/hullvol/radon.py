"""Normed planes with polygonal unit balls: Birkhoff orthogonality and Radon curves.

All decisions are exact and combinatorial.  Radon-ness is not stable under
perturbation, so a rational approximation of a regular hexagon is generally
*not* Radon; test the rational affine-regular hexagon
``(1,0),(1,1),(0,1),(-1,0),(-1,-1),(0,-1)`` instead (Birkhoff orthogonality
is affine invariant).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .convex import ConvexPolygon, Direction, Vec2, _ray_hit, max_chord_param, support2, support_value
from .errors import NotOnBoundary, NotSymmetric, ZeroVector
from .functionals import critical_directions, chord_width_product, profile_values


def is_o_symmetric(P: ConvexPolygon) -> bool:
    verts = set(P.vertices)
    return all(-v in verts for v in P.vertices)


@dataclass(frozen=True)
class UnitBall2:
    P: ConvexPolygon

    def __post_init__(self):
        if not is_o_symmetric(self.P):
            raise NotSymmetric("unit ball must be symmetric about the origin")


@dataclass(frozen=True)
class Feature:
    kind: str  # "vertex" or "edge"
    index: int


def supporting_feature(P: ConvexPolygon, y: Vec2) -> tuple:
    """(feature, boundary point) where the ray through y leaves P."""
    i, t = _ray_hit(P, y)
    p = y * t
    if p == P.vertices[i]:
        return Feature("vertex", i), p
    return Feature("edge", i), p


def _parallel_to_cone(x: Vec2, e_in: Vec2, e_out: Vec2) -> bool:
    # some supporting line at the vertex is parallel to x; the cone is closed
    for d in (x, -x):
        if e_in.cross(d) >= 0 and d.cross(e_out) >= 0:
            return True
    return False


def birkhoff(B: UnitBall2, x, y) -> bool:
    """x is Birkhoff orthogonal to y: x parallels a supporting line of the ball at y/||y||."""
    x = x if isinstance(x, Vec2) else Vec2(*x)
    y = y if isinstance(y, Vec2) else Vec2(*y)
    if x.is_zero() or y.is_zero():
        raise ZeroVector("Birkhoff orthogonality needs nonzero vectors")
    P = B.P
    feat, _ = supporting_feature(P, y)
    edges = P.edges
    if feat.kind == "edge":
        return x.cross(edges[feat.index]) == 0
    return _parallel_to_cone(x, edges[feat.index - 1], edges[feat.index])


def is_radon(B: UnitBall2) -> bool:
    """Exact test whether Birkhoff orthogonality of the norm is symmetric.

    Up to sign, boundary directions split into vertex directions and open
    edge arcs.  At a vertex v the orthogonal directions form the closed arc
    between the adjacent edge directions; along an edge they are the single
    edge direction.  The relation is symmetric iff for every vertex v_i the
    edge parallel to v_i exists and its endpoints point along the two edges
    adjacent to v_i.
    """
    P = B.P
    vs, es = P.vertices, P.edges
    n = len(vs)
    edge_by_dir: dict = {}
    for j, e in enumerate(es):
        edge_by_dir.setdefault(Direction.of(e), j)
    vdirs = [Direction.of(v) for v in vs]
    for i in range(n):
        j = edge_by_dir.get(vdirs[i])
        if j is None:
            return False
        ends = {vdirs[j], vdirs[(j + 1) % n]}
        adjacent = {Direction.of(es[i - 1]), Direction.of(es[i])}
        if ends != adjacent:
            return False
    return True


def probe_directions(B: UnitBall2, extra: int = 0, seed: int = 0) -> list:
    """Vertex directions, edge directions, and ``extra`` random rational directions."""
    P = B.P
    dirs = {Direction.of(v) for v in P.vertices}
    dirs.update(Direction.of(e) for e in P.edges)
    out = sorted(dirs, key=lambda d: d.key)
    rng = np.random.default_rng(seed)
    for _ in range(extra):
        a, b = rng.integers(-1000, 1001, size=2)
        if a == 0 and b == 0:
            continue
        out.append(Direction.of(Vec2(int(a), int(b))))
    return out


def asymmetric_pairs(B: UnitBall2, directions: Iterable) -> list:
    """Brute force: every ordered pair (x, y) with x orthogonal to y but not y to x."""
    dirs = [d.v if isinstance(d, Direction) else d for d in directions]
    out = []
    for x in dirs:
        for y in dirs:
            if birkhoff(B, x, y) and not birkhoff(B, y, x):
                out.append((x, y))
    return out


def birkhoff_partner(P: ConvexPolygon, x) -> np.ndarray:
    """Float boundary point y with x orthogonal to y (the touching point of a supporting line parallel to x)."""
    x = np.asarray(x, dtype=float)
    n = np.array([-x[1], x[0]])
    V = np.array(P.to_float())
    return V[int(np.argmax(V @ n))]


def a_k_area(P: ConvexPolygon, x) -> object:
    """Area of conv{o, x, y} for y on a supporting line of P parallel to x.

    The supporting line on the side of x_perp also supports 2x + P.  Every
    point y on it gives the same area; both ends of the contact segment are
    evaluated and must agree.
    """
    x = x if isinstance(x, Vec2) else Vec2(*x)
    if not is_o_symmetric(P):
        raise NotSymmetric("A_K is defined for o-symmetric bodies")
    if x.is_zero():
        raise NotOnBoundary("the origin is not on the boundary")
    t = _ray_hit(P, x)[1]
    if t != 1:
        raise NotOnBoundary(f"{x} is not on the boundary (radial parameter {t})")
    half = Fraction(1, 2) if P.exact and isinstance(x.x, (int, Fraction)) else 0.5
    sup = support2(P, x.rot90())
    areas = [abs(x.cross(P.vertices[i])) * half for i in sup.indices]
    if any(a != areas[0] for a in areas):
        raise AssertionError("A_K depends on the choice of y")
    return areas[0]


def eight_a_identity(P: ConvexPolygon, x) -> tuple:
    """(d(x) w(x_perp) in raw form, 8 A(x)) for a boundary point x of an o-symmetric P."""
    x = x if isinstance(x, Vec2) else Vec2(*x)
    w = x.rot90()
    lhs = max_chord_param(P, x) * (support_value(P, w) + support_value(P, -w))
    return lhs, 8 * a_k_area(P, x)


def tcv_deviation(P: ConvexPolygon, m: int = 256) -> tuple:
    """(min f, max f, max/min) of the translate profile f(u) = d(u) w(u_perp).

    Evaluated on m grid angles together with every critical direction of
    P - P, so the reported maximum is the true one.
    """
    if m < 64:
        raise ValueError("tcv_deviation needs m >= 64")
    grid = profile_values(P, np.pi * np.arange(m) / m)
    crit = [float(chord_width_product(P, d.v)) for d in critical_directions(P)]
    vals = np.concatenate([grid, np.array(crit)])
    lo, hi = float(vals.min()), float(vals.max())
    return lo, hi, hi / lo
