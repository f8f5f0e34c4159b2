"""Self-check suites run by ``hullvol verify``.

Each suite returns a list of :class:`Check`; failures are reported, never raised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bodies as bd
from .convex import max_chord_param, polygon, regular_polygon, reuleaux_polygon, translate
from .functionals import c_0, c_1, c_tr, chord_width_product, hull_area_union
from .radon import UnitBall2, asymmetric_pairs, eight_a_identity, is_radon, probe_directions, tcv_deviation
from .samples import (
    random_boundary_point,
    random_convex,
    random_direction,
    random_parallelogram,
    random_symmetric_polygon,
    random_triangle,
)

SUITES = ("thm1", "thm2", "thm3", "thm4", "thm5", "corollaries", "identities")

DISK = 1 + 4 / math.pi
BALL3 = 2.5


@dataclass
class Check:
    name: str
    measured: object
    expected: str
    passed: bool


def _close(name, measured, target, tol) -> Check:
    return Check(name, float(measured), f"{target:.10g} +- {tol:g}", abs(float(measured) - target) <= tol)


def _above(name, measured, floor) -> Check:
    return Check(name, float(measured), f"> {floor:g}", float(measured) > floor)


def _exact(name, measured, target) -> Check:
    return Check(name, measured, str(target), measured == target)


def _ellipsoid(seed: int = 5) -> bd.Ellipsoid:
    rng = np.random.default_rng(seed)
    Q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    return bd.Ellipsoid((0.3, -1.0, 2.0), tuple(rng.uniform(0.5, 3.0, size=3)), Q)


def suite_thm1(seed: int = 0) -> list:
    disk = regular_polygon(1024)
    out = [
        _close("c_tr disk 1024-gon", c_tr(disk).value, DISK, 5e-3),
        _close("c_tr ball n=3", bd.c_tr_nd(bd.Ball(3)).value, BALL3, 1e-6),
        _close("c_tr triaxial ellipsoid", bd.c_tr_nd(_ellipsoid(seed)).value, BALL3, 1e-6),
        _above("c_tr cube", bd.c_tr_nd(bd.cube()).value, BALL3 + 0.1),
        _above("c_tr regular simplex", bd.c_tr_nd(bd.regular_simplex()).value, BALL3 + 0.1),
    ]
    return out


def suite_thm2(seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    hexagon = UnitBall2(polygon([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]))
    agree = 0
    trials = 20
    for _ in range(trials):
        B = UnitBall2(random_symmetric_polygon(rng, int(rng.integers(3, 5))))
        brute = not asymmetric_pairs(B, probe_directions(B, extra=20, seed=int(rng.integers(1 << 30))))
        agree += brute == is_radon(B)
    lo, hi, ratio = tcv_deviation(reuleaux_polygon(64), 256)
    _, _, disk_ratio = tcv_deviation(regular_polygon(4096), 256)
    _, _, sq_ratio = tcv_deviation(polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)]), 64)
    return [
        Check("affine-regular hexagon is Radon", is_radon(hexagon), "True", is_radon(hexagon)),
        Check("is_radon agrees with brute force", f"{agree}/{trials}", f"{trials}/{trials}", agree == trials),
        Check("Reuleaux polygon tcv ratio", ratio, "<= 1.001", ratio <= 1.001),
        Check("disk polygon tcv ratio", disk_ratio, "<= 1 + 1e-5", disk_ratio <= 1 + 1e-5),
        _close("square tcv ratio", sq_ratio, 2.0, 1e-12),
    ]


def suite_thm3(seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    T = random_triangle(rng)
    return [
        _exact("c_0 random triangle", c_0(T).value, 4),
        _close("c_0 ball n=3", bd.c_0_nd(bd.Ball(3)).value, BALL3, 1e-6),
        _above("c_0 cube", bd.c_0_nd(bd.cube()).value, BALL3 + 0.1),
        _above("c_0 regular simplex", bd.c_0_nd(bd.regular_simplex()).value, BALL3 + 0.1),
    ]


def suite_thm4(seed: int = 0) -> list:
    cube = bd.cube()
    chyp = bd.c_hyp_nd(cube, samples=256).value
    ctr = bd.c_tr_nd(cube).value
    return [
        _close("c_1 disk 1024-gon", c_1(regular_polygon(1024)).value, DISK, 5e-3),
        _close("c_hyp ball n=3", bd.c_hyp_nd(bd.Ball(3)).value, BALL3, 1e-4),
        _above("c_hyp cube", chyp, BALL3 + 0.1),
        Check("c_hyp >= c_tr on the cube", chyp - ctr, ">= -1e-6", chyp >= ctr - 1e-6),
    ]


def suite_thm5(seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    eq = regular_polygon(3)
    return [
        _exact("t_3: c_tr random triangle", c_tr(random_triangle(rng)).value, 3),
        _exact("t_4: c_tr random quadrilateral", c_tr(random_convex(rng, 4)).value, 3),
        _close("t_5: c_tr regular pentagon", c_tr(regular_polygon(5)).value, (10 + math.sqrt(5)) / 5, 1e-6),
        _exact("p_3: c_0 random triangle", c_0(random_triangle(rng)).value, 4),
        _exact("p_4: c_0 random parallelogram", c_0(random_parallelogram(rng)).value, 3),
        _close("p_5: c_0 regular pentagon", c_0(regular_polygon(5)).value, (15 - math.sqrt(5)) / 5, 1e-6),
        _close("l_3: c_1 equilateral triangle", c_1(eq).value, 4.0, 1e-5),
        _close("l_4: c_1 square", c_1(polygon([(0, 0), (1, 0), (1, 1), (0, 1)])).value, 3.0, 1e-5),
    ]


def suite_corollaries(seed: int = 0) -> list:
    r = lambda B: bd.cylinder_check(B)["max_right"].value  # noqa: E731
    return [
        _close("cylinder ratio ball n=3", r(bd.Ball(3)), 1.5, 1e-6),
        _above("cylinder ratio cube", r(bd.cube()), 1.5),
        _above("cylinder ratio regular simplex", r(bd.regular_simplex()), 1.5),
        _above("cylinder ratio ellipsoid (1,1,2)", r(bd.Ellipsoid((0, 0, 0), (1, 1, 2))), 1.5),
    ]


def suite_identities(seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    ok_8a = 0
    n_8a = 0
    for _ in range(20):
        P = random_symmetric_polygon(rng, 4)
        for _ in range(5):
            lhs, rhs = eight_a_identity(P, random_boundary_point(rng, P))
            ok_8a += lhs == rhs
            n_8a += 1
    ok_hull = 0
    n_hull = 100
    for _ in range(n_hull):
        P = random_convex(rng, int(rng.integers(3, 9)))
        v = random_direction(rng)
        t = max_chord_param(P, v)
        ok_hull += hull_area_union(P, translate(P, v * t)) == P.area + chord_width_product(P, v)
    worst = 0.0
    for k in range(5):
        B = bd.random_symmetric_polytope(3, 10, seed=seed + k).translated(rng.standard_normal(3))
        u = rng.standard_normal(3)
        u /= np.linalg.norm(u)
        lhs = sum(bd.hyp_ratio(B, s * u) for s in (1, -1)) * B.volume
        rhs = 2 * B.volume + 2 * bd.width_many(B, u[None])[0] * bd.brightness_many(B, u[None])[0]
        worst = max(worst, abs(lhs - rhs))
    return [
        Check("8A identity (exact)", f"{ok_8a}/{n_8a}", f"{n_8a}/{n_8a}", ok_8a == n_8a),
        Check("planar touching-translate hull identity (exact)", f"{ok_hull}/{n_hull}", f"{n_hull}/{n_hull}", ok_hull == n_hull),
        Check("nD cylinder identity", worst, "<= 1e-6", worst <= 1e-6),
    ]


def run_suite(name: str, seed: int = 0) -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return globals()[f"suite_{name}"](seed)
