"""Independent brute-force evaluators used to cross-check the library."""
import math

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial import ConvexHull

from hullvol.functionals import profile_values


def dense_ctr(P, samples=100_000, polish=32):
    """c_tr by dense direction sampling on [0, pi), each top peak polished by bounded search.

    Returns (polished value, raw sampled max).  Sampling alone is only first
    order accurate at kinks, so the peaks are refined inside their grid cell.
    """
    area = float(P.area)
    th = math.pi * np.arange(samples) / samples
    f = profile_values(P, th)
    h = math.pi / samples
    peaks = np.flatnonzero((f >= np.roll(f, 1)) & (f >= np.roll(f, -1)))
    peaks = peaks[np.argsort(-f[peaks])][:polish]
    best = float(f.max())
    for i in peaks:
        # search the offset so the solver's relative x tolerance stays tiny
        g = lambda s, t0=th[i]: -float(profile_values(P, [t0 + s])[0])  # noqa: E731
        r = minimize_scalar(g, bounds=(-h, h), method="bounded", options={"xatol": 1e-16})
        best = max(best, -r.fun)
    return 1 + best / area, 1 + float(f.max()) / area


def float_c0(P):
    X = np.array(P.to_float())
    A = ConvexHull(X).volume
    return max(ConvexHull(np.vstack([X, 2 * z - X])).volume for z in X) / A


def shoelace(points):
    X = np.array(points, dtype=float)
    H = X[ConvexHull(X).vertices]
    x, y = H[:, 0], H[:, 1]
    return 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
