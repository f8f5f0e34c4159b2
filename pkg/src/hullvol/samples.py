"""Random exact instances for checks and tests."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .convex import ConvexPolygon, Vec2, hull2
from .errors import DegenerateInput, NotConvexPolygon


def _q(rng, lo: int = -100, hi: int = 100, den: int = 7) -> Fraction:
    return Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, den + 1)))


def rational_point(rng) -> Vec2:
    return Vec2(_q(rng), _q(rng))


def random_convex(rng, m: int, tries: int = 10_000) -> ConvexPolygon:
    """Rational convex m-gon: hull of points on a jittered circle, retried until m survive."""
    for _ in range(tries):
        th = np.sort(rng.random(m)) * 2 * np.pi
        r = rng.uniform(0.5, 1.5, size=2)
        pts = [
            Vec2(Fraction(int(round(100 * r[0] * np.cos(t))) + int(rng.integers(-2, 3)), 10),
                 Fraction(int(round(100 * r[1] * np.sin(t))) + int(rng.integers(-2, 3)), 10))
            for t in th
        ]
        try:
            P = hull2(pts)
        except (NotConvexPolygon, DegenerateInput):
            continue
        if len(P) == m:
            return P
    raise RuntimeError(f"could not sample a convex {m}-gon")


def random_triangle(rng) -> ConvexPolygon:
    while True:
        pts = [rational_point(rng) for _ in range(3)]
        if (pts[1] - pts[0]).cross(pts[2] - pts[0]) != 0:
            return hull2(pts)


def random_parallelogram(rng) -> ConvexPolygon:
    while True:
        o, a, b = rational_point(rng), rational_point(rng), rational_point(rng)
        if a.cross(b) != 0:
            return hull2([o, o + a, o + a + b, o + b])


def random_symmetric_polygon(rng, k: int) -> ConvexPolygon:
    """conv(+-p_i) for k random rational points; o-symmetric with nonempty interior."""
    while True:
        pts = [rational_point(rng) for _ in range(k)]
        try:
            P = hull2(pts + [-p for p in pts])
        except (NotConvexPolygon, DegenerateInput):
            continue
        if len(P) >= 4:
            return P


def random_boundary_point(rng, P: ConvexPolygon) -> Vec2:
    """Vertex or rational point on an edge."""
    i = int(rng.integers(len(P)))
    lam = Fraction(int(rng.integers(0, 17)), 16)
    return P[i] + P.edges[i] * lam


def random_direction(rng, bound: int = 50) -> Vec2:
    while True:
        a, b = (int(x) for x in rng.integers(-bound, bound + 1, size=2))
        if a or b:
            return Vec2(a, b)
