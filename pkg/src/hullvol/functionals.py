"""Hull-area functionals of planar convex polygons.

``c_tr`` and ``c_0`` are computed exactly over the rationals; ``c_1`` is a
float computation over supporting lines, with ``c_1_triangle`` as a
closed-form cross-check for triangles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

import numpy as np
from scipy.optimize import brentq

from .convex import (
    ConvexPolygon,
    Direction,
    Line2,
    Vec2,
    _extreme_index,
    _ray_hit,
    hull2,
    line_reflect,
    point_reflect,
)
from .errors import InvalidTolerance, NotATriangle

GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class FunctionalValue:
    value: Union[Fraction, float]
    exact: bool
    maximizer: Any
    details: dict = field(default_factory=dict)

    def __float__(self):
        return float(self.value)


# ---------------------------------------------------------------------------
# translates


def hull_area_union(P: ConvexPolygon, Q: ConvexPolygon):
    """Area of conv(P u Q); P and Q need not intersect."""
    return hull2(list(P.vertices) + list(Q.vertices)).area


def chord_width_product(P: ConvexPolygon, v) -> Any:
    """t(v) * (h(v_perp) + h(-v_perp)) for the raw vector v.

    For unit u = v/|v| this is d(u) * w(u_perp): the longest chord parallel
    to u times the width across it.  |v| cancels, so rational v gives a
    rational result.
    """
    v = v if isinstance(v, Vec2) else Vec2(*v)
    D = P.difference
    t = _ray_hit(D, v)[1]
    w = v.rot90()
    return t * D.vertices[_extreme_index(D, w)].dot(w)


def critical_directions(P: ConvexPolygon) -> list:
    """Canonical directions of the vertices and edges of P - P, sorted.

    Between consecutive critical directions the chord-width product is a
    ratio of two linear forms in (cos, sin), hence monotone; its maximum is
    therefore attained on this set.
    """
    D = P.difference
    dirs = {Direction.of(d) for d in D.vertices}
    dirs.update(Direction.of(e) for e in D.edges)
    return sorted(dirs, key=lambda d: d.key)


def c_tr(P: ConvexPolygon) -> FunctionalValue:
    """Translative hull constant 1 + max_u d(u) w(u_perp) / area(P)."""
    best = None
    best_dir = None
    for d in critical_directions(P):
        f = chord_width_product(P, d.v)
        # sorted by key, so strict > keeps the smallest direction on ties
        if best is None or f > best:
            best, best_dir = f, d
    area = P.area
    D = P.difference
    t = _ray_hit(D, best_dir.v)[1]
    value = 1 + best / area
    return FunctionalValue(
        value=value,
        exact=P.exact,
        maximizer=best_dir,
        details={
            "area": area,
            "chord_raw": t,
            "width_raw": best / t,
            "hull_area": area + best,
        },
    )


def _float_difference_body(P: ConvexPolygon):
    D = P.difference
    V = np.array(D.to_float())
    E = np.roll(V, -1, axis=0) - V
    # outward normals n with n.x <= c on D; c > 0 since D is o-symmetric
    N = np.column_stack([E[:, 1], -E[:, 0]])
    c = np.einsum("ij,ij->i", N, V)
    return V, N, c


def profile_values(P: ConvexPolygon, thetas) -> np.ndarray:
    """Float chord-width product d(u) w(u_perp) at unit directions u(theta)."""
    V, N, c = _float_difference_body(P)
    th = np.asarray(thetas, dtype=float)
    U = np.column_stack([np.cos(th), np.sin(th)])
    W = np.column_stack([-U[:, 1], U[:, 0]])
    radial = 1.0 / np.max((U @ N.T) / c, axis=1)
    width = np.max(W @ V.T, axis=1)
    return radial * width


def profile_tr(P: ConvexPolygon, m: int) -> list:
    """m equally spaced samples (theta, f) of the translate profile on [0, pi)."""
    if m < 1:
        raise ValueError("need at least one sample")
    thetas = np.pi * np.arange(m) / m
    return list(zip(thetas.tolist(), profile_values(P, thetas).tolist()))


# ---------------------------------------------------------------------------
# point reflections


def c_0(P: ConvexPolygon) -> FunctionalValue:
    """Point-reflection hull constant.

    The reflected copy 2x - P meets P iff x lies in P, and
    x -> area(conv(P u (2x - P))) is convex, so only vertices need checking.
    """
    best = None
    best_i = 0
    for i, z in enumerate(P.vertices):
        a = hull_area_union(P, point_reflect(P, z))
        if best is None or a > best:
            best, best_i = a, i
    area = P.area
    return FunctionalValue(
        value=best / area,
        exact=P.exact,
        maximizer=best_i,
        details={"area": area, "hull_area": best, "vertex": P.vertices[best_i]},
    )


def c_0_at(P: ConvexPolygon, x) -> Any:
    """Hull-area ratio for the reflection about an arbitrary point x of P."""
    x = x if isinstance(x, Vec2) else Vec2(*x)
    return hull_area_union(P, point_reflect(P, x)) / P.area


# ---------------------------------------------------------------------------
# line reflections


def c_1_at(P: ConvexPolygon, line: Line2) -> Any:
    """Hull-area ratio for the reflection about an arbitrary line (exact for rational lines)."""
    return hull_area_union(P, line_reflect(P, line)) / P.area


def _c1_objective(V: np.ndarray, area: float, phis: np.ndarray) -> np.ndarray:
    """Hull-area ratio for reflection about the supporting line with inner normal n(phi).

    P sits on the side n.x >= c of the line.  The hull of P and its mirror
    image is symmetric about the line, and its half on P's side is P plus
    the region between the line and P's near chain, so

        area = 2 * (area(P) + sum over near edges of trapezoids).
    """
    phis = np.atleast_1d(np.asarray(phis, dtype=float))
    E = np.roll(V, -1, axis=0) - V
    Nout = np.column_stack([E[:, 1], -E[:, 0]])
    out = np.empty(len(phis))
    chunk = max(1, 2_000_000 // max(len(V), 1))
    for start in range(0, len(phis), chunk):
        ph = phis[start:start + chunk]
        n = np.column_stack([np.cos(ph), np.sin(ph)])
        d = np.column_stack([n[:, 1], -n[:, 0]])
        t = n @ V.T
        t -= t.min(axis=1, keepdims=True)
        s = d @ V.T
        near = (n @ Nout.T) < 0
        t_next = np.roll(t, -1, axis=1)
        s_next = np.roll(s, -1, axis=1)
        trap = 0.5 * (t + t_next) * np.abs(s_next - s)
        extra = np.where(near, trap, 0.0).sum(axis=1)
        out[start:start + chunk] = 2.0 * (area + extra) / area
    return out


def _c1_scalar(V: list, area: float, phi: float) -> float:
    # same formula as _c1_objective for one angle; plain floats beat numpy at small m
    nx, ny = math.cos(phi), math.sin(phi)
    m = len(V)
    t = [x * nx + y * ny for x, y in V]
    s = [x * ny - y * nx for x, y in V]
    lo = min(t)
    extra = 0.0
    for i in range(m):
        j = (i + 1) % m
        ex, ey = V[j][0] - V[i][0], V[j][1] - V[i][1]
        # outward normal (ey, -ex) facing the line
        if nx * ey - ny * ex < 0:
            extra += 0.5 * (t[i] + t[j] - 2 * lo) * abs(s[j] - s[i])
    return 2.0 * (area + extra) / area


def c1_objective(P: ConvexPolygon, phis) -> np.ndarray:
    """Vectorized c_1 objective at inner-normal angles phi (float path)."""
    V = np.array(P.to_float())
    return _c1_objective(V, float(P.area), phis)


def _supporting_line(V: np.ndarray, phi: float) -> Line2:
    n = np.array([math.cos(phi), math.sin(phi)])
    i = int(np.argmin(V @ n))
    return Line2(Vec2(float(V[i, 0]), float(V[i, 1])), Direction(Vec2(float(n[1]), float(-n[0]))))


def _golden_max(f, a: float, b: float, xtol: float):
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def c_1(P: ConvexPolygon, tol: float = 1e-9, grid: int = 2048, max_brackets: int = 64) -> FunctionalValue:
    """Line-reflection hull constant, maximized over supporting lines.

    Each direction angle in [0, pi) carries two supporting lines, so the
    scan covers 2*grid inner-normal angles on the full circle.  Every grid
    local maximum that could still beat the incumbent (judged by a Lipschitz
    estimate of the grid) is refined by golden section, best first, at most
    ``max_brackets`` of them.
    """
    if not tol > 0:
        raise InvalidTolerance(f"tolerance must be positive, got {tol}")
    V = np.array(P.to_float())
    area = float(P.area)
    k = 2 * grid
    h = 2 * np.pi / k
    phis = h * np.arange(k)
    g = _c1_objective(V, area, phis)
    slope = np.max(np.abs(np.diff(np.append(g, g[0])))) / h
    lip = 2.0 * slope + 1e-12
    is_peak = (g >= np.roll(g, 1)) & (g >= np.roll(g, -1))
    peaks = np.flatnonzero(is_peak)
    peaks = peaks[np.argsort(-g[peaks], kind="stable")]
    best_phi, best = float(phis[int(np.argmax(g))]), float(np.max(g))
    if len(V) <= 32:
        Vl = [tuple(map(float, row)) for row in V]
        f = lambda x: _c1_scalar(Vl, area, x)  # noqa: E731
    else:
        f = lambda x: float(_c1_objective(V, area, [x])[0])  # noqa: E731
    xtol = min(tol, 1e-6) / max(1.0, lip)
    xtol = max(xtol, 1e-13)
    refined = 0
    for i in peaks:
        if refined >= max_brackets:
            break
        if g[i] + lip * h < best - tol:
            break
        x, fx = _golden_max(f, phis[i] - h, phis[i] + h, xtol)
        refined += 1
        if fx > best:
            best, best_phi = fx, x
    best_phi %= 2 * np.pi
    return FunctionalValue(
        value=best,
        exact=False,
        maximizer=_supporting_line(V, best_phi),
        details={"area": area, "hull_area": best * area, "normal_angle": best_phi, "brackets": refined},
    )


def acute_line_angle(t_prev: float, t_next: float, alpha: float) -> float:
    """Maximizer of A(L) over lines making acute angles with both sides."""
    lo, hi = max(0.0, math.pi / 2 - alpha), min(math.pi / 2, math.pi - alpha)
    if math.isclose(alpha, math.pi / 2, abs_tol=1e-15):
        return math.pi / 4
    G = lambda b: t_next ** 2 * math.cos(2 * b) - t_prev ** 2 * math.cos(2 * (math.pi - alpha - b))
    glo, ghi = G(lo), G(hi)
    if glo > 0 > ghi:
        return brentq(G, lo, hi, xtol=1e-15, rtol=1e-15)
    return lo if glo <= 0 else hi


def _acute_ratio(t_prev: float, t_next: float, alpha: float, area: float) -> float:
    b = acute_line_angle(t_prev, t_next, alpha)
    g = math.pi - alpha - b
    return 0.25 * (t_next ** 2 * math.sin(2 * b) + t_prev ** 2 * math.sin(2 * g)) / area


def _vertex_best(t_prev: float, t_next: float, alpha: float, area: float) -> tuple:
    """Best supporting line through a vertex a_i with interior angle alpha.

    t_next = |a_i a_{i+1}|, t_prev = |a_i a_{i-1}|; beta is the angle from
    the line to [a_i, a_{i+1}] and gamma = pi - alpha - beta the angle from
    [a_i, a_{i-1}] to the line.  Returns (U, beta, regime) with U half the
    area of the hull of T and its mirror image.
    """
    b = acute_line_angle(t_prev, t_next, alpha)
    candidates = [(area * (1.0 + _acute_ratio(t_prev, t_next, alpha, area)), b, "acute")]
    if alpha < math.pi / 2:
        top = math.pi / 2 - alpha
        clamp = lambda x: min(max(x, 0.0), top)
        # gamma obtuse: both neighbours project to the far side of a_i
        b = clamp(math.pi / 4)
        candidates.append((area + 0.25 * t_next ** 2 * math.sin(2 * b), b, "gamma-obtuse"))
        b = clamp(math.pi / 4 - alpha)
        candidates.append((-0.25 * t_prev ** 2 * math.sin(2 * (math.pi - alpha - b)), b, "gamma-obtuse"))
        # beta obtuse, mirrored
        g = clamp(math.pi / 4)
        candidates.append((area + 0.25 * t_prev ** 2 * math.sin(2 * g), math.pi - alpha - g, "beta-obtuse"))
        g = clamp(math.pi / 4 - alpha)
        b = math.pi - alpha - g
        candidates.append((-0.25 * t_next ** 2 * math.sin(2 * b), b, "beta-obtuse"))
    return max(candidates, key=lambda c: c[0])


def c_1_triangle(T: ConvexPolygon) -> FunctionalValue:
    """Closed-form c_1 for a triangle.

    Every supporting line of a triangle passes through a vertex.  For the
    line through a_i making angles beta, gamma (both acute) with the two
    sides, the hull has area 2 area(T) + 2 A_i(L) with
    A_i(L) = (t_next^2 sin 2beta + t_prev^2 sin 2gamma)/4, maximized where
    t_next^2 cos 2beta = t_prev^2 cos 2gamma (a right angle gives
    beta = gamma = pi/4).  For thin triangles the best line can leave the
    acute regime; those pieces have their own closed forms and are included.
    """
    if len(T) != 3:
        raise NotATriangle(f"expected 3 vertices, got {len(T)}")
    pts = [np.array(v) for v in T.to_float()]
    area = float(T.area)
    best = None
    acute_ratios = []
    for i in range(3):
        a, nxt, prv = pts[i], pts[(i + 1) % 3], pts[(i + 2) % 3]
        t_next, t_prev = float(np.linalg.norm(nxt - a)), float(np.linalg.norm(prv - a))
        cosang = float(np.dot(nxt - a, prv - a)) / (t_next * t_prev)
        alpha = math.acos(max(-1.0, min(1.0, cosang)))
        U, beta, regime = _vertex_best(t_prev, t_next, alpha, area)
        acute_ratios.append(_acute_ratio(t_prev, t_next, alpha, area))
        if best is None or U > best[0] + 1e-15:
            best = (U, i, beta, regime)
    U, i, beta, regime = best
    a, nxt = pts[i], pts[(i + 1) % 3]
    e = (nxt - a) / np.linalg.norm(nxt - a)
    # line direction: rotate [a_i, a_{i+1}] clockwise by beta
    c, s = math.cos(-beta), math.sin(-beta)
    d = np.array([c * e[0] - s * e[1], s * e[0] + c * e[1]])
    line = Line2(Vec2(float(a[0]), float(a[1])), Direction(Vec2(float(d[0]), float(d[1]))))
    return FunctionalValue(
        value=2.0 * U / area,
        exact=False,
        maximizer=line,
        details={
            "area": area,
            "vertex": i,
            "beta": beta,
            "regime": regime,
            "acute_ratios": acute_ratios,
        },
    )
