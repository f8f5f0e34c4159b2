"""Derivative-free minimisation of the hull functionals over convex m-gons."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import ConvexHull, QhullError

from .convex import ConvexPolygon, Vec2, hull2, rational_approx
from .errors import GenerationFailure, NotConvexPolygon
from .functionals import c_0, c_1, c_tr

FUNCTIONALS = ("tr", "c0", "c1")

# proven minima for small m; anything below these (minus slack) is an evaluation bug
KNOWN_FLOORS = {
    ("tr", 3): 3.0,
    ("tr", 4): 3.0,
    ("tr", 5): (10 + math.sqrt(5)) / 5,
    ("c0", 3): 4.0,
    ("c0", 4): 3.0,
    ("c0", 5): (15 - math.sqrt(5)) / 5,
    ("c1", 3): 4.0,
    ("c1", 4): 3.0,
}

EXPERIMENTAL_BANNER = "experimental value for m >= 6: no acceptance claim (open problem)"

SNAP = 2**40


@dataclass(frozen=True)
class SearchConfig:
    m: int
    functional: str = "tr"
    restarts: int = 10
    max_iters: int = 4000
    tol: float = 1e-10
    seed: int = 0
    c1_inner_tol: float = 1e-9
    c1_grid: int = 256
    jobs: int = 1

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("m must be at least 3")
        if self.functional not in FUNCTIONALS:
            raise ValueError(f"functional must be one of {FUNCTIONALS}")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass
class SearchResult:
    best: ConvexPolygon
    value: float
    per_restart: list
    regularity: float
    config: SearchConfig
    exact_value: object = None
    notes: list = field(default_factory=list)

    @property
    def experimental(self) -> bool:
        return self.config.m >= 6


# ---------------------------------------------------------------------------
# polygons


def random_polygon(m: int, seed) -> ConvexPolygon:
    """Rational m-gon from jittered points on a random ellipse; deterministic per seed."""
    if m < 3:
        raise ValueError("m must be at least 3")
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        a, b = rng.uniform(0.5, 2.0, size=2)
        rot = rng.uniform(0, math.pi)
        base = 2 * math.pi * np.arange(m) / m
        th = base + rng.uniform(-0.4, 0.4, size=m) * 2 * math.pi / m
        x, y = a * np.cos(th), b * np.sin(th)
        c, s = math.cos(rot), math.sin(rot)
        pts = [Vec2(rational_approx(c * xi - s * yi, 1e-9), rational_approx(s * xi + c * yi, 1e-9)) for xi, yi in zip(x, y)]
        try:
            P = hull2(pts)
        except NotConvexPolygon:
            continue
        if len(P) == m:
            return P
    raise GenerationFailure(f"no convex {m}-gon after 1000 attempts")


def _float_array(P: ConvexPolygon) -> np.ndarray:
    return np.array(P.to_float(), dtype=float)


def _moments(X: np.ndarray):
    """Area, centroid and second-moment matrix (about the centroid) of a ccw polygon."""
    Y = np.roll(X, -1, axis=0)
    cr = X[:, 0] * Y[:, 1] - Y[:, 0] * X[:, 1]
    A = cr.sum() / 2
    c = ((X + Y) * cr[:, None]).sum(axis=0) / (6 * A)
    Xc, Yc = X - c, np.roll(X - c, -1, axis=0)
    cr = Xc[:, 0] * Yc[:, 1] - Yc[:, 0] * Xc[:, 1]
    sxx = ((Xc[:, 0] ** 2 + Xc[:, 0] * Yc[:, 0] + Yc[:, 0] ** 2) * cr).sum() / 12
    syy = ((Xc[:, 1] ** 2 + Xc[:, 1] * Yc[:, 1] + Yc[:, 1] ** 2) * cr).sum() / 12
    sxy = ((2 * Xc[:, 0] * Xc[:, 1] + Xc[:, 0] * Yc[:, 1] + Yc[:, 0] * Xc[:, 1] + 2 * Yc[:, 0] * Yc[:, 1]) * cr).sum() / 24
    return A, c, np.array([[sxx, sxy], [sxy, syy]])


def _from_array(X: np.ndarray) -> ConvexPolygon:
    return hull2([Vec2(float(x), float(y)) for x, y in X])


def affine_normalize(P: ConvexPolygon) -> ConvexPolygon:
    """Centroid to the origin, isotropic second moments, area 1 (float-backed)."""
    X = _float_array(P)
    _, c, S = _moments(X)
    w, Q = np.linalg.eigh(S)
    T = Q @ np.diag(w ** -0.5) @ Q.T
    Y = (X - c) @ T.T
    A, _, _ = _moments(Y)
    return _from_array(Y / math.sqrt(A))


def similarity_normalize(P: ConvexPolygon) -> ConvexPolygon:
    X = _float_array(P)
    A, c, _ = _moments(X)
    return _from_array((X - c) / math.sqrt(A))


def regularity_deviation(P: ConvexPolygon):
    """(max A_i - min A_i) / area, A_i the area of consecutive vertex triples."""
    if len(P) < 4:
        raise ValueError("regularity needs m >= 4")
    vs = P.vertices
    n = len(vs)
    # twice the triple areas; halve once at the end so rationals stay rational
    A2 = [abs((vs[i] - vs[i - 1]).cross(vs[(i + 1) % n] - vs[i])) for i in range(n)]
    return (max(A2) - min(A2)) / (2 * P.area)


def side_deviation(P: ConvexPolygon) -> float:
    """(longest - shortest side) / longest side."""
    L = [math.hypot(*e.to_float()) for e in P.edges]
    return (max(L) - min(L)) / max(L)


def is_rhombus(P: ConvexPolygon, tol: float = 1e-2) -> bool:
    return len(P) == 4 and side_deviation(P) <= tol


# ---------------------------------------------------------------------------
# float objectives for the inner loop


def _hull_ccw(X: np.ndarray):
    try:
        h = ConvexHull(X)
    except QhullError:
        return None
    return X[h.vertices]


def ctr_float(X: np.ndarray) -> float:
    """c_tr of a ccw convex polygon from the critical directions of its difference body."""
    D = _hull_ccw((X[:, None, :] - X[None, :, :]).reshape(-1, 2))
    E = np.roll(D, -1, axis=0) - D
    N = np.column_stack([E[:, 1], -E[:, 0]])
    c = np.einsum("ij,ij->i", N, D)
    U = np.vstack([D, E])
    W = np.column_stack([-U[:, 1], U[:, 0]])
    t = 1.0 / ((U @ N.T) / c).max(axis=1)
    f = t * (W @ D.T).max(axis=1)
    A = 0.5 * np.sum(X[:, 0] * np.roll(X[:, 1], -1) - np.roll(X[:, 0], -1) * X[:, 1])
    return 1 + float(f.max()) / A


def c0_float(X: np.ndarray) -> float:
    A = ConvexHull(X).volume
    return max(ConvexHull(np.vstack([X, 2 * z - X])).volume for z in X) / A


def _snap(x: float) -> Fraction:
    return Fraction(round(x * SNAP), SNAP)


def snap_polygon(X: np.ndarray) -> ConvexPolygon:
    """Dyadic rational polygon at granularity 2^-40."""
    return hull2([Vec2(_snap(a), _snap(b)) for a, b in X])


class _Objective:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg

    def __call__(self, z: np.ndarray) -> float:
        m = self.cfg.m
        X = z.reshape(m, 2)
        H = _hull_ccw(X)
        # hull repair: accept only if every point is a strict vertex
        if H is None or len(H) != m:
            return math.inf
        A = 0.5 * np.sum(H[:, 0] * np.roll(H[:, 1], -1) - np.roll(H[:, 0], -1) * H[:, 1])
        if not A > 1e-9:
            return math.inf
        f = self.cfg.functional
        if f == "tr":
            return ctr_float(H)
        if f == "c0":
            return c0_float(H)
        try:
            return float(c_1(_from_array(H), tol=self.cfg.c1_inner_tol, grid=self.cfg.c1_grid).value)
        except NotConvexPolygon:
            return math.inf


def evaluate(P: ConvexPolygon, functional: str, cfg: SearchConfig | None = None):
    """Reported value: exact for tr/c0 on rational input, float path for c1."""
    if functional == "tr":
        return c_tr(P).value
    if functional == "c0":
        return c_0(P).value
    tol = cfg.c1_inner_tol if cfg else 1e-9
    return c_1(P, tol=tol).value


def _normalize(P: ConvexPolygon, functional: str) -> ConvexPolygon:
    return similarity_normalize(P) if functional == "c1" else affine_normalize(P)


def _one_restart(args):
    cfg, k, seed = args
    P = _normalize(random_polygon(cfg.m, seed), cfg.functional)
    X0 = _float_array(P)
    diam = float(np.max(np.linalg.norm(X0[:, None] - X0[None], axis=-1)))
    obj = _Objective(cfg)
    x = X0.ravel()
    fx = obj(x)
    # restart Nelder-Mead from its own optimum until it stops improving
    for _ in range(4):
        sim = np.vstack([x] + [x + 0.1 * diam * e for e in np.eye(len(x))])
        res = minimize(
            obj, x, method="Nelder-Mead",
            options={"initial_simplex": sim, "xatol": cfg.tol, "fatol": cfg.tol, "maxiter": cfg.max_iters, "maxfev": 2 * cfg.max_iters},
        )
        if not res.fun < fx - cfg.tol:
            if res.fun < fx:
                x, fx = res.x, float(res.fun)
            break
        x, fx = res.x, float(res.fun)
        diam = float(np.max(np.linalg.norm(x.reshape(-1, 2)[:, None] - x.reshape(-1, 2)[None], axis=-1)))
    return k, seed, x.reshape(cfg.m, 2), fx


def restart_seeds(seed: int, restarts: int) -> list:
    ss = np.random.SeedSequence(seed)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in ss.spawn(restarts)]


def minimize_functional(cfg: SearchConfig) -> SearchResult:
    """Multi-start Nelder-Mead over raw vertex coordinates.

    Restarts use independent seed streams; the reduction is min by value,
    ties by restart index.  The winner is snapped to dyadic rationals for
    tr/c0 and its value recomputed on the exact path.
    """
    seeds = restart_seeds(cfg.seed, cfg.restarts)
    tasks = [(cfg, k, s) for k, s in enumerate(seeds)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            runs = list(ex.map(_one_restart, tasks))
    else:
        runs = [_one_restart(t) for t in tasks]
    runs.sort(key=lambda r: r[0])
    k_best, _, X_best, _ = min(runs, key=lambda r: (r[3], r[0]))
    per_restart = sorted(((s, fx) for _, s, _, fx in runs), key=lambda p: p[1])
    notes = []
    if cfg.functional in ("tr", "c0"):
        best = snap_polygon(X_best)
        exact = evaluate(best, cfg.functional)
        value = float(exact)
    else:
        best = _from_array(X_best)
        exact = None
        value = float(evaluate(best, "c1", cfg))
    if cfg.m >= 6:
        notes.append(EXPERIMENTAL_BANNER)
    reg = float(regularity_deviation(best)) if cfg.m >= 4 else 0.0
    return SearchResult(best, value, per_restart, reg, cfg, exact_value=exact, notes=notes)
