"""Numerical convex bodies in R^n: polytopes, balls and ellipsoids.

Volumes, support/chord/brightness oracles and the direction-maximised hull
functionals.  Everything here is float64; hulls go through Qhull.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Union

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, Delaunay, QhullError
from scipy.special import gamma
from scipy.stats import norm as _normal, qmc

from .errors import DegenerateBody, DimensionMismatch, LPFailure, UnsupportedBody

MAX_DIM = 6
_UNIT_TOL = 1e-9


def v_ball(n: int) -> float:
    """Volume of the Euclidean unit ball in R^n."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return math.pi ** (n / 2) / gamma(n / 2 + 1)


# ---------------------------------------------------------------------------
# hulls


def _qhull(points: np.ndarray) -> ConvexHull:
    try:
        return ConvexHull(points)
    except QhullError:
        pass
    # nearly coplanar inputs (reflected copies share a facet): joggle and retry
    try:
        return ConvexHull(points, qhull_options="QJ")
    except QhullError as exc:
        raise DegenerateBody(f"convex hull failed: {exc}") from None


def _check_full_dim(points: np.ndarray):
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] <= pts.shape[1]:
        raise DegenerateBody("need more than n points in R^n")
    centred = pts - pts.mean(axis=0)
    s = np.linalg.svd(centred, compute_uv=False)
    if s[-1] <= 1e-12 * max(s[0], 1.0):
        raise DegenerateBody("points do not span R^n")
    return pts


def simplex_volume_sum(points: np.ndarray, simplices: np.ndarray, apex: np.ndarray) -> float:
    """Sum of |det| / n! over the cones from apex to each boundary simplex."""
    n = points.shape[1]
    M = points[simplices] - apex
    return float(np.abs(np.linalg.det(M)).sum() / math.factorial(n))


def hull_volume(points) -> float:
    """Volume of conv(points) by coning the triangulated boundary from an interior point."""
    pts = _check_full_dim(points)
    h = _qhull(pts)
    apex = pts[h.vertices].mean(axis=0)
    return simplex_volume_sum(h.points, h.simplices, apex)


def mc_hull_volume(points, samples: int = 200_000, seed: int = 0) -> tuple:
    """Monte-Carlo (volume, standard error) of conv(points) by point location."""
    pts = _check_full_dim(points)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    box = float(np.prod(hi - lo))
    rng = np.random.default_rng(seed)
    X = lo + (hi - lo) * rng.random((samples, pts.shape[1]))
    inside = Delaunay(pts).find_simplex(X) >= 0
    p = inside.mean()
    return box * p, box * math.sqrt(p * (1 - p) / samples)


# ---------------------------------------------------------------------------
# bodies


@dataclass(frozen=True)
class Facet:
    normal: np.ndarray
    offset: float
    vertices: tuple
    measure: float


class Polytope:
    """Full-dimensional convex polytope given by (a superset of) its vertices."""

    def __init__(self, vertices):
        pts = _check_full_dim(vertices)
        self.dim = pts.shape[1]
        h = _qhull(pts)
        self.vertices = pts[np.sort(h.vertices)]
        self._hull = h

    def __repr__(self):
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)})"

    @cached_property
    def _tri(self):
        # boundary simplices with unit outer normals and (n-1)-measures
        h = self._hull
        P = h.points
        S = h.simplices
        N = h.equations[:, :-1]
        N = N / np.linalg.norm(N, axis=1)[:, None]
        n = self.dim
        base = P[S[:, 1:]] - P[S[:, :1]]
        M = np.concatenate([base, N[:, None, :]], axis=1)
        meas = np.abs(np.linalg.det(M)) / math.factorial(n - 1)
        return P, S, N, meas

    @cached_property
    def volume(self) -> float:
        P, S, _, _ = self._tri
        return simplex_volume_sum(P, S, self.vertices.mean(axis=0))

    @cached_property
    def facets(self) -> list:
        """Facets with coplanar boundary simplices merged."""
        P, S, N, meas = self._tri
        off = np.einsum("ij,ij->i", N, P[S[:, 0]])
        groups: dict = {}
        for k in range(len(S)):
            key = None
            for g, (n0, c0) in groups.items():
                if abs(c0 - off[k]) <= 1e-9 * (1 + abs(c0)) and np.abs(n0 - N[k]).max() <= 1e-9:
                    key = g
                    break
            if key is None:
                key = len(groups)
                groups[key] = (N[k], off[k])
        members: dict = {}
        for k in range(len(S)):
            for g, (n0, c0) in groups.items():
                if abs(c0 - off[k]) <= 1e-9 * (1 + abs(c0)) and np.abs(n0 - N[k]).max() <= 1e-9:
                    members.setdefault(g, []).append(k)
                    break
        out = []
        for g, ks in members.items():
            verts = sorted({int(v) for k in ks for v in S[k]})
            out.append(Facet(groups[g][0], float(groups[g][1]), tuple(verts), float(meas[ks].sum())))
        return out

    def euler_characteristic(self) -> int:
        """V - E + F for n = 3 (2 for a valid polytope)."""
        if self.dim != 3:
            raise DimensionMismatch("Euler check is for 3-polytopes")
        F = self.facets
        E = sum(len(f.vertices) for f in F) // 2
        return len(self.vertices) - E + len(F)

    @cached_property
    def difference_facets(self):
        """Outer normals and offsets of B - B (rows n_i . x <= c_i)."""
        V = self.vertices
        D = (V[:, None, :] - V[None, :, :]).reshape(-1, self.dim)
        h = _qhull(D)
        N = h.equations[:, :-1]
        c = -h.equations[:, -1]
        return N, c

    def translated(self, t) -> "Polytope":
        return Polytope(self.vertices + np.asarray(t, dtype=float))


@dataclass(frozen=True)
class Ball:
    dim: int
    radius: float = 1.0
    center: Optional[tuple] = None

    def __post_init__(self):
        if self.dim < 1:
            raise DegenerateBody("dimension must be >= 1")
        if not self.radius > 0:
            raise DegenerateBody("radius must be positive")
        c = np.zeros(self.dim) if self.center is None else np.asarray(self.center, dtype=float)
        if c.shape != (self.dim,):
            raise DimensionMismatch("center has the wrong dimension")
        object.__setattr__(self, "center", tuple(c.tolist()))

    @property
    def volume(self) -> float:
        return v_ball(self.dim) * self.radius ** self.dim

    def translated(self, t) -> "Ball":
        return Ball(self.dim, self.radius, tuple(np.asarray(self.center) + np.asarray(t, dtype=float)))


@dataclass(frozen=True)
class Ellipsoid:
    center: tuple
    semiaxes: tuple
    orientation: Optional[np.ndarray] = field(default=None, compare=False)

    def __post_init__(self):
        a = np.asarray(self.semiaxes, dtype=float)
        c = np.asarray(self.center, dtype=float)
        n = len(a)
        if c.shape != (n,):
            raise DimensionMismatch("center and semiaxes disagree in dimension")
        if np.any(a <= 0):
            raise DegenerateBody("semiaxes must be positive")
        Q = np.eye(n) if self.orientation is None else np.asarray(self.orientation, dtype=float)
        if Q.shape != (n, n) or np.abs(Q @ Q.T - np.eye(n)).max() > 1e-12:
            raise DegenerateBody("orientation must be an orthogonal matrix")
        object.__setattr__(self, "center", tuple(c.tolist()))
        object.__setattr__(self, "semiaxes", tuple(a.tolist()))
        object.__setattr__(self, "orientation", Q)

    @property
    def dim(self) -> int:
        return len(self.semiaxes)

    @cached_property
    def shape_matrix(self) -> np.ndarray:
        """M with the body {c + y : y^T M^{-1} y <= 1}."""
        Q = self.orientation
        return Q @ np.diag(np.square(self.semiaxes)) @ Q.T

    @cached_property
    def inverse_shape(self) -> np.ndarray:
        Q = self.orientation
        return Q @ np.diag(1.0 / np.square(self.semiaxes)) @ Q.T

    @property
    def volume(self) -> float:
        return v_ball(self.dim) * float(np.prod(self.semiaxes))

    def translated(self, t) -> "Ellipsoid":
        return Ellipsoid(tuple(np.asarray(self.center) + np.asarray(t, dtype=float)), self.semiaxes, self.orientation)


BodyN = Union[Polytope, Ball, Ellipsoid]


def cube(n: int = 3, side: float = 1.0) -> Polytope:
    grid = np.array(np.meshgrid(*[[0.0, side]] * n, indexing="ij")).reshape(n, -1).T
    return Polytope(grid)


def regular_simplex(n: int = 3, edge: float = 1.0) -> Polytope:
    # standard simplex in R^{n+1} projected onto its own hyperplane
    E = np.eye(n + 1)
    c = E.mean(axis=0)
    _, _, Vt = np.linalg.svd(E - c)
    pts = (E - c) @ Vt[:n].T
    return Polytope(pts * edge / math.sqrt(2))


def cross_polytope(n: int = 3, radius: float = 1.0) -> Polytope:
    E = np.eye(n) * radius
    return Polytope(np.vstack([E, -E]))


def random_symmetric_polytope(n: int, k: int, seed: int = 0) -> Polytope:
    """conv(+-x_i) for k Gaussian points, so the origin is the centre."""
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((k, n))
    return Polytope(np.vstack([X, -X]))


def ellipsoid_polytope(E: Union[Ellipsoid, Ball], samples: int = 2000) -> Polytope:
    """Inscribed polytope on sphere-sample boundary points."""
    n = E.dim
    U = sphere_points(n, samples)
    if isinstance(E, Ball):
        return Polytope(np.asarray(E.center) + E.radius * U)
    A = E.orientation @ np.diag(E.semiaxes)
    return Polytope(np.asarray(E.center) + U @ A.T)


def dim_of(B: BodyN) -> int:
    return B.dim


def volume_nd(B: BodyN) -> float:
    if isinstance(B, (Polytope, Ball, Ellipsoid)):
        v = B.volume
        if not v > 0:
            raise DegenerateBody("zero volume")
        return v
    raise UnsupportedBody(f"unknown body type {type(B).__name__}")


def _unit(u, n: int) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (n,):
        raise DimensionMismatch(f"direction must have {n} components")
    r = np.linalg.norm(u)
    if abs(r - 1) > _UNIT_TOL:
        raise ValueError("direction must be a unit vector")
    return u


# ---------------------------------------------------------------------------
# pointwise oracles (vectorised over rows of U)


def support_many(B: BodyN, U: np.ndarray) -> np.ndarray:
    if isinstance(B, Polytope):
        return (U @ B.vertices.T).max(axis=1)
    c = U @ np.asarray(B.center)
    if isinstance(B, Ball):
        return c + B.radius * np.linalg.norm(U, axis=1)
    return c + np.sqrt(np.einsum("ij,jk,ik->i", U, B.shape_matrix, U))


def support_width_nd(B: BodyN, u) -> tuple:
    u = _unit(u, B.dim)
    U = np.vstack([u, -u])
    hp, hm = support_many(B, U)
    return float(hp), float(hm), float(hp + hm)


def width_many(B: BodyN, U: np.ndarray) -> np.ndarray:
    return support_many(B, U) + support_many(B, -U)


def chord_many(B: BodyN, U: np.ndarray) -> np.ndarray:
    if isinstance(B, Polytope):
        N, c = B.difference_facets
        return 1.0 / ((U @ N.T) / c).max(axis=1)
    if isinstance(B, Ball):
        return np.full(len(U), 2 * B.radius)
    # the longest chord goes through the centre: t^2 u^T M^{-1} u = 1
    return 2.0 / np.sqrt(np.einsum("ij,jk,ik->i", U, B.inverse_shape, U))


def chord_lp(P: Polytope, u) -> float:
    """max t with x and x + t u in P, as an LP over convex weights of the vertices."""
    V = P.vertices
    k, n = V.shape
    u = np.asarray(u, dtype=float)
    # variables: lambda (k), mu (k), t ; maximise t
    cost = np.zeros(2 * k + 1)
    cost[-1] = -1.0
    A_eq = np.zeros((n + 2, 2 * k + 1))
    A_eq[:n, :k] = V.T
    A_eq[:n, k : 2 * k] = -V.T
    A_eq[:n, -1] = u
    A_eq[n, :k] = 1
    A_eq[n + 1, k : 2 * k] = 1
    b_eq = np.zeros(n + 2)
    b_eq[n:] = 1
    bounds = [(0, None)] * (2 * k) + [(0, None)]
    res = linprog(cost, A_eq=A_eq, b_eq=b_eq, bounds=bounds, method="highs")
    if res.status != 0:
        raise LPFailure(res.message)
    return float(-res.fun)


def chord_nd(B: BodyN, u) -> float:
    u = _unit(u, B.dim)
    return float(chord_many(B, u[None, :])[0])


def brightness_many(B: BodyN, U: np.ndarray) -> np.ndarray:
    n = B.dim
    if isinstance(B, Polytope):
        _, _, N, meas = B._tri
        return 0.5 * np.abs(U @ N.T) @ meas
    if n == 1:
        return np.ones(len(U))
    if isinstance(B, Ball):
        return np.full(len(U), v_ball(n - 1) * B.radius ** (n - 1))
    det = float(np.prod(B.semiaxes)) ** 2
    q = np.einsum("ij,jk,ik->i", U, B.inverse_shape, U)
    return v_ball(n - 1) * math.sqrt(det) * np.sqrt(q)


def brightness_nd(B: BodyN, u) -> float:
    u = _unit(u, B.dim)
    return float(brightness_many(B, u[None, :])[0])


def radial_many(B: BodyN, U: np.ndarray, origin=None) -> np.ndarray:
    """Radial function about origin (default: the centre/vertex centroid)."""
    if isinstance(B, Polytope):
        o = B.vertices.mean(axis=0) if origin is None else np.asarray(origin, dtype=float)
        h = B._hull
        N = h.equations[:, :-1]
        c = -h.equations[:, -1] - N @ o
        return 1.0 / ((U @ N.T) / c).max(axis=1)
    if origin is not None and np.abs(np.asarray(origin) - np.asarray(B.center)).max() > 0:
        raise ValueError("radial function of a ball/ellipsoid is about its centre")
    if isinstance(B, Ball):
        return np.full(len(U), B.radius)
    return 1.0 / np.sqrt(np.einsum("ij,jk,ik->i", U, B.inverse_shape, U))


def polar_volume(B: BodyN, samples: int = 100_000, seed: int = 0) -> float:
    """Volume as v_n times the sphere average of r(u)^n (polar coordinates)."""
    n = B.dim
    U = sphere_points(n, samples, seed)
    return v_ball(n) * float(np.mean(radial_many(B, U) ** n))


def _perp_basis(u: np.ndarray) -> np.ndarray:
    # columns span u-perp
    Q, _ = np.linalg.qr(np.column_stack([u, np.eye(len(u))]))
    return Q[:, 1 : len(u)]


def mc_shadow_area(B: BodyN, u, samples: int = 1_000_000, seed: int = 0) -> tuple:
    """Monte-Carlo (area, standard error) of the projection of B onto u-perp.

    Membership is decided independently of the brightness formulas: a
    projected point is in the shadow iff its line parallel to u meets B.
    """
    u = _unit(u, B.dim)
    n = B.dim
    W = _perp_basis(u)
    rng = np.random.default_rng(seed)
    if isinstance(B, Polytope):
        Y = B.vertices @ W
        lo, hi = Y.min(axis=0), Y.max(axis=0)
        X = lo + (hi - lo) * rng.random((samples, n - 1))
        if n == 2:
            inside = (X[:, 0] >= lo[0]) & (X[:, 0] <= hi[0])
        else:
            h = _qhull(Y)
            inside = (X @ h.equations[:, :-1].T + h.equations[:, -1] <= 1e-12).all(axis=1)
    else:
        c = np.asarray(B.center)
        if isinstance(B, Ball):
            Minv = np.eye(n) / B.radius**2
            r = B.radius
        else:
            Minv = B.inverse_shape
            r = max(B.semiaxes)
        lo = c @ W - r
        hi = c @ W + r
        X = lo + (hi - lo) * rng.random((samples, n - 1))
        # line p + t u with p = W x - c relative to the centre; quadratic in t
        P = X @ W.T - c
        a = u @ Minv @ u
        b = P @ Minv @ u
        cc = np.einsum("ij,jk,ik->i", P, Minv, P) - 1
        inside = b * b - a * cc >= 0
    box = float(np.prod(hi - lo))
    p = float(inside.mean())
    return box * p, box * math.sqrt(p * (1 - p) / samples)


# ---------------------------------------------------------------------------
# direction optimisation


@dataclass(frozen=True)
class DirOptResult:
    value: float
    direction: np.ndarray
    samples_used: int
    refined: bool
    point: Optional[np.ndarray] = None


def sphere_points(n: int, count: int, seed: int = 0) -> np.ndarray:
    """Deterministic low-discrepancy unit vectors.

    n = 2: equally spaced angles; n = 3: Fibonacci spiral; n > 3: scrambled
    Sobol points pushed through the normal quantile and normalised.
    """
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        th = 2 * math.pi * (np.arange(count) + 0.5) / count
        return np.column_stack([np.cos(th), np.sin(th)])
    if n == 3:
        k = np.arange(count) + 0.5
        z = 1 - 2 * k / count
        phi = k * math.pi * (3 - math.sqrt(5))
        r = np.sqrt(1 - z * z)
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    m = max(1, math.ceil(math.log2(count)))
    S = qmc.Sobol(d=n, scramble=True, seed=seed).random_base2(m)[:count]
    G = _normal.ppf(np.clip(S, 1e-12, 1 - 1e-12))
    return G / np.linalg.norm(G, axis=1)[:, None]


def default_samples(n: int) -> int:
    if n <= 2:
        return 1024
    return 2000 * 2 ** (n - 3)


def _pattern_search(f: Callable, u: np.ndarray, fu: float, step: float, tol: float, max_evals: int = 4000):
    """Compass search on the sphere in a tangent frame at the current point."""
    evals = 0
    while step > tol and evals < max_evals:
        T = _perp_basis(u)
        improved = False
        for j in range(T.shape[1]):
            for s in (step, -step):
                v = u + s * T[:, j]
                v /= np.linalg.norm(v)
                fv = f(v)
                evals += 1
                if fv > fu:
                    u, fu, improved = v, fv, True
                    break
            if improved:
                break
        if not improved:
            step *= 0.5
    return u, fu, evals


def maximize_on_sphere(
    f_many: Callable,
    n: int,
    samples: Optional[int] = None,
    top: int = 16,
    tol: float = 1e-9,
    seed: int = 0,
    f_one: Optional[Callable] = None,
) -> DirOptResult:
    """Coarse low-discrepancy sampling, then pattern search from the best candidates.

    Ties go to the lexicographically smallest direction.
    """
    if n > MAX_DIM:
        raise DimensionMismatch(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
    samples = default_samples(n) if samples is None else samples
    U = sphere_points(n, samples, seed)
    vals = np.asarray(f_many(U), dtype=float)
    used = len(U)
    one = f_one or (lambda v: float(f_many(v[None, :])[0]))
    if n == 1:
        i = int(np.argmax(vals))
        return DirOptResult(float(vals[i]), U[i], used, False)
    order = np.lexsort(list(U[:, ::-1].T) + [-vals])[:top]
    step = 2.0 / math.sqrt(samples) if n == 2 else 4.0 / samples ** (1 / (n - 1))
    best_u, best_f = None, -np.inf
    for i in order:
        u, fu, k = _pattern_search(one, U[i].copy(), float(vals[i]), step, tol)
        used += k
        if fu > best_f or (fu == best_f and tuple(u) < tuple(best_u)):
            best_u, best_f = u, fu
    return DirOptResult(best_f, best_u, used, True)


def minimize_on_sphere(f_many: Callable, n: int, **kw) -> DirOptResult:
    r = maximize_on_sphere(lambda U: -np.asarray(f_many(U)), n, **kw)
    return DirOptResult(-r.value, r.direction, r.samples_used, r.refined)


# ---------------------------------------------------------------------------
# functionals


def tr_profile_many(B: BodyN, U: np.ndarray) -> np.ndarray:
    """d(u) * vol_{n-1}(B | u-perp) / vol(B)."""
    return chord_many(B, U) * brightness_many(B, U) / volume_nd(B)


def c_tr_nd(B: BodyN, samples: Optional[int] = None, tol: float = 1e-9, seed: int = 0) -> DirOptResult:
    """1 + max_u d(u) vol_{n-1}(B|u-perp) / vol(B)."""
    r = maximize_on_sphere(lambda U: tr_profile_many(B, U), B.dim, samples=samples, tol=tol, seed=seed)
    return DirOptResult(1 + r.value, r.direction, r.samples_used, r.refined)


def reflect_in_hyperplane(X: np.ndarray, u: np.ndarray, h: float) -> np.ndarray:
    """Mirror rows of X in {x : x.u = h}, u a unit vector."""
    return X - 2 * np.outer(X @ u - h, u)


def ball_hull_ratio(n: int) -> float:
    """vol(conv(B u B')) / vol(B) for two touching balls: 1 + 2 v_{n-1} / v_n."""
    return 1 + 2 * v_ball(n - 1) / v_ball(n)


def _is_round(B) -> bool:
    return isinstance(B, Ball) or (
        isinstance(B, Ellipsoid) and max(B.semiaxes) - min(B.semiaxes) <= 1e-12 * max(B.semiaxes)
    )


def hyp_ratio(P: Polytope, u: np.ndarray) -> float:
    V = P.vertices
    h = float((V @ u).max())
    return hull_volume(np.vstack([V, reflect_in_hyperplane(V, u, h)])) / P.volume


def c_hyp_nd(B: BodyN, samples: Optional[int] = None, tol: float = 1e-7, seed: int = 0, approx: int = 2000) -> DirOptResult:
    """max over supporting hyperplanes of vol(conv(B u mirror image)) / vol(B).

    Balls use the closed form; non-round ellipsoids are replaced by an
    inscribed polytope on ``approx`` boundary points.
    """
    n = B.dim
    if _is_round(B):
        u = np.zeros(n)
        u[0] = 1.0
        return DirOptResult(ball_hull_ratio(n), u, 0, False)
    if isinstance(B, Ellipsoid):
        B = ellipsoid_polytope(B, approx)
    if not isinstance(B, Polytope):
        raise UnsupportedBody(f"c_hyp_nd does not handle {type(B).__name__}")
    samples = samples if samples is not None else max(256, default_samples(n) // 2)
    return maximize_on_sphere(
        lambda U: np.array([hyp_ratio(B, u) for u in U]), n, samples=samples, tol=tol, seed=seed, top=8
    )


def c0_ratio(P: Polytope, x) -> float:
    V = P.vertices
    x = np.asarray(x, dtype=float)
    return hull_volume(np.vstack([V, 2 * x - V])) / P.volume


def c_0_nd(B: BodyN) -> DirOptResult:
    """max over x in B of vol(conv(B u (2x - B))) / vol(B).

    The ratio is convex in x, so polytopes need only their vertices; for
    ellipsoids the value is affine invariant and equals the ball value.
    """
    n = B.dim
    if isinstance(B, (Ball, Ellipsoid)):
        u = np.zeros(n)
        u[0] = 1.0
        c = np.asarray(B.center)
        x = c + (B.radius if isinstance(B, Ball) else 1.0) * (u if isinstance(B, Ball) else B.orientation @ (u * B.semiaxes))
        return DirOptResult(ball_hull_ratio(n), u, 0, False, point=x)
    if not isinstance(B, Polytope):
        raise UnsupportedBody(f"c_0_nd does not handle {type(B).__name__}")
    V = B.vertices
    vals = [c0_ratio(B, x) for x in V]
    i = int(np.argmax(vals))
    c = V.mean(axis=0)
    d = V[i] - c
    return DirOptResult(float(vals[i]), d / np.linalg.norm(d), len(V), False, point=V[i].copy())


def right_cylinder_many(B: BodyN, U: np.ndarray) -> np.ndarray:
    """w(u) vol_{n-1}(B|u-perp) / vol(B): the circumscribed right cylinder over the body volume."""
    return width_many(B, U) * brightness_many(B, U) / volume_nd(B)


def cylinder_check(B: BodyN, samples: Optional[int] = None, tol: float = 1e-9, seed: int = 0) -> dict:
    f = lambda U: right_cylinder_many(B, U)  # noqa: E731
    return {
        "max_right": maximize_on_sphere(f, B.dim, samples=samples, tol=tol, seed=seed),
        "min_over_u_of_right": minimize_on_sphere(f, B.dim, samples=samples, tol=tol, seed=seed),
    }
