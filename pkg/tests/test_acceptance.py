"""Acceptance criteria, one test per criterion; each prints a single PASS/FAIL line."""
import math

import numpy as np
import pytest

from hullvol import bodies as bd
from hullvol.convex import Direction, area2, max_chord_param, regular_polygon, reuleaux_polygon, steiner2, translate
from hullvol.functionals import c_0, c_1, c_1_triangle, c_tr, chord_width_product, hull_area_union
from hullvol.radon import UnitBall2, asymmetric_pairs, birkhoff_partner, eight_a_identity, is_radon, probe_directions, tcv_deviation
from hullvol.samples import (
    random_boundary_point,
    random_convex,
    random_direction,
    random_parallelogram,
    random_symmetric_polygon,
    random_triangle,
)
from hullvol.search import SearchConfig, minimize_functional, side_deviation

from .conftest import ACCEPTANCE_LINES
from .oracles import dense_ctr

T5 = (10 + math.sqrt(5)) / 5
P5_STATED = 2.4702282
DISK = 1 + 4 / math.pi
BALL3 = 2.5


def record(label, checks):
    """checks: list of (description, ok).  Prints and stores one line, then asserts."""
    bad = [d for d, ok in checks if not ok]
    line = f"[{'PASS' if not bad else 'FAIL'}] {label}"
    if bad:
        line += " -- failed: " + "; ".join(bad)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not bad, line


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def test_criterion_01_triangles_and_quadrilaterals(rng):
    tri = sum(c_tr(random_triangle(rng)).value == 3 for _ in range(1000))
    quad = sum(c_tr(random_convex(rng, 4)).value == 3 for _ in range(1000))
    record(
        f"1 translates: c_tr == 3 on {tri}/1000 triangles, {quad}/1000 quadrilaterals",
        [("triangles", tri == 1000), ("quadrilaterals", quad == 1000)],
    )


def test_criterion_02_pentagon_translates():
    direct = float(c_tr(regular_polygon(5)).value)
    r = minimize_functional(SearchConfig(m=5, functional="tr", restarts=50, seed=7))
    lowest = min(v for _, v in r.per_restart)
    record(
        f"2 pentagon translates: regular {direct:.10f}, search {r.value:.10f}, regularity {r.regularity:.2e}",
        [
            ("regular pentagon within 1e-6", abs(direct - T5) <= 1e-6),
            ("search reaches t_5 + 1e-4", r.value <= T5 + 1e-4),
            ("search never below t_5 - 1e-6", min(lowest, r.value) >= T5 - 1e-6),
            ("winner affine regular", r.regularity <= 1e-3),
        ],
    )


def test_criterion_03a_point_reflection_small_cases(rng):
    tri = all(c_0(random_triangle(rng)).value == 4 for _ in range(200))
    par = all(c_0(random_parallelogram(rng)).value == 3 for _ in range(200))
    strict = []
    while len(strict) < 200:
        Q = random_convex(rng, 4)
        e = Q.edges
        if e[0].cross(e[2]) == 0 and e[1].cross(e[3]) == 0:
            continue
        strict.append(c_0(Q).value > 3)
    record(
        "3a point reflections: c_0 == 4 on triangles, == 3 on parallelograms, > 3 on other quadrilaterals",
        [("triangles", tri), ("parallelograms", par), ("non-parallelograms strict", all(strict))],
    )


def test_criterion_03b_point_reflection_pentagon_stated_value():
    # the stated pentagon value is checked as given; see the notes for why it cannot hold
    v = float(c_0(regular_polygon(5)).value)
    record(
        f"3b point reflections: c_0(regular pentagon) = {v:.10f} vs stated {P5_STATED} +- 1e-6",
        [(f"measured {v:.10f}, closed form (15 - sqrt 5)/5 = {(15 - math.sqrt(5)) / 5:.10f}", abs(v - P5_STATED) <= 1e-6)],
    )


def test_criterion_04_line_reflections(rng):
    eq = c_1(regular_polygon(3)).value
    sq = c_1(regular_polygon(4)).value
    worst = 0.0
    for _ in range(200):
        T = random_triangle(rng)
        worst = max(worst, abs(c_1_triangle(T).value - c_1(T, tol=1e-10).value))
    scalene = []
    while len(scalene) < 50:
        T = random_triangle(rng)
        if side_deviation(T) > 0.05:
            scalene.append(c_1(T).value)
    record(
        f"4 line reflections: equilateral {eq:.8f}, square {sq:.8f}, closed form gap {worst:.1e}, min scalene {min(scalene):.5f}",
        [
            ("equilateral within 1e-5", abs(eq - 4) <= 1e-5),
            ("square within 1e-5", abs(sq - 3) <= 1e-5),
            ("closed form agrees within 1e-6", worst <= 1e-6),
            ("scalene > 4 + 1e-4", min(scalene) > 4 + 1e-4),
        ],
    )


def test_criterion_05_equality_cases(rng):
    disk = regular_polygon(4096)
    ball = bd.Ball(3)
    Q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    ell = bd.Ellipsoid(tuple(rng.standard_normal(3)), tuple(rng.uniform(0.5, 3.0, 3)), Q)
    vals = {
        "c_tr disk": float(c_tr(disk).value),
        "c_1 disk": c_1(disk).value,
        "c_tr ball": bd.c_tr_nd(ball).value,
        "c_0 ball": bd.c_0_nd(ball).value,
        "c_hyp ball": bd.c_hyp_nd(ball).value,
        "c_tr ellipsoid": bd.c_tr_nd(ell).value,
    }
    checks = [(k, abs(v - DISK) <= 5e-3) for k, v in vals.items() if "disk" in k]
    checks += [(k, abs(v - BALL3) <= 1e-4) for k, v in vals.items() if "disk" not in k]
    excess = {}
    for name, P in (("cube", bd.cube()), ("simplex", bd.regular_simplex())):
        for fn, f in (("c_tr", bd.c_tr_nd), ("c_0", bd.c_0_nd), ("c_hyp", lambda B: bd.c_hyp_nd(B, samples=256))):
            excess[f"{fn} {name}"] = f(P).value
    checks += [(f"{k} >= 2.6", v >= BALL3 + 0.1) for k, v in excess.items()]
    summary = ", ".join(f"{k} {v:.6f}" for k, v in {**vals, **excess}.items())
    record(f"5 equality cases: {summary}", checks)


def test_criterion_06_exact_identities(rng):
    eight = 0
    for _ in range(100):
        P = random_symmetric_polygon(rng, int(rng.integers(2, 6)))
        for _ in range(10):
            lhs, rhs = eight_a_identity(P, random_boundary_point(rng, P))
            eight += lhs == rhs
    planar = 0
    for _ in range(500):
        P = random_convex(rng, int(rng.integers(3, 10)))
        v = random_direction(rng)
        planar += hull_area_union(P, translate(P, v * max_chord_param(P, v))) == area2(P) + chord_width_product(P, v)
    worst = 0.0
    for k in range(10):
        B = bd.Polytope(np.random.default_rng(100 + k).standard_normal((int(8 + 4 * k), 3)))
        for u in bd.sphere_points(3, 20, seed=k):
            lhs = (bd.hyp_ratio(B, u) + bd.hyp_ratio(B, -u)) * B.volume
            rhs = 2 * B.volume + 2 * bd.width_many(B, u[None])[0] * bd.brightness_many(B, u[None])[0]
            worst = max(worst, abs(lhs - rhs))
    record(
        f"6 identities: 8A {eight}/1000 exact, planar hull {planar}/500 exact, nD cylinder max error {worst:.1e}",
        [("8A", eight == 1000), ("planar hull", planar == 500), ("nD cylinder within 1e-6", worst <= 1e-6)],
    )


def test_criterion_07_circumscribed_cylinders():
    r = lambda B: bd.cylinder_check(B)["max_right"].value  # noqa: E731
    ball, cube, simplex, ell = r(bd.Ball(3)), r(bd.cube()), r(bd.regular_simplex()), r(bd.Ellipsoid((0, 0, 0), (1, 1, 2)))
    record(
        f"7 cylinders: ball {ball:.10f}, cube {cube:.6f}, simplex {simplex:.6f}, ellipsoid(1,1,2) {ell:.6f}",
        [("ball 1.5 +- 1e-6", abs(ball - 1.5) <= 1e-6), ("cube > 1.5", cube > 1.5), ("simplex > 1.5", simplex > 1.5), ("ellipsoid > 1.5", ell > 1.5)],
    )


def test_criterion_08_radon(rng):
    agree = 0
    pairs = []
    for i in range(50):
        target = 6 if i % 2 else 8
        while True:
            P = random_symmetric_polygon(rng, target // 2)
            if len(P) == target:
                break
        B = UnitBall2(P)
        dirs = probe_directions(B, extra=100, seed=i)
        pairs.append(len(dirs) ** 2)
        agree += is_radon(B) == (not asymmetric_pairs(B, dirs))
    disk = regular_polygon(4096)
    worst = 0.0
    for a in rng.uniform(0, math.pi, 50):
        x = np.array([math.cos(a), math.sin(a)])
        y = birkhoff_partner(disk, x)
        back = birkhoff_partner(disk, y / np.linalg.norm(y))
        worst = max(worst, abs(x[0] * back[1] - x[1] * back[0]) / np.linalg.norm(back))
    ratio = tcv_deviation(reuleaux_polygon(64), 256)[2]
    record(
        f"8 Radon: brute force agreement {agree}/50 (>= {min(pairs)} pairs each), disk asymmetry {worst:.1e}, Reuleaux tcv {ratio:.6f}",
        [("agreement", agree == 50), ("10^4 pairs", min(pairs) >= 10_000), ("disk symmetric within 1e-3", worst <= 1e-3), ("Reuleaux <= 1.001", ratio <= 1.001)],
    )


def test_criterion_09_steiner(rng):
    mono = area = 0
    for _ in range(100):
        P = random_convex(rng, int(rng.integers(3, 9)))
        S = steiner2(P, Direction.of(random_direction(rng)))
        area += area2(S) == area2(P)
        mono += c_tr(S).value <= c_tr(P).value
    record(f"9 Steiner: monotone {mono}/100, area exact {area}/100", [("monotone", mono == 100), ("area", area == 100)])


def test_criterion_10_midpoint_convexity(rng):
    ok = 0
    for _ in range(500):
        P = random_convex(rng, int(rng.integers(3, 9)))
        v1, v2 = random_direction(rng, 30), random_direction(rng, 30)
        mid = hull_area_union(P, translate(P, (v1 + v2) / 2))
        ok += 2 * mid <= hull_area_union(P, translate(P, v1)) + hull_area_union(P, translate(P, v2))
    record(f"10 midpoint convexity: {ok}/500 exact", [("convex", ok == 500)])


def test_criterion_11_oracle_equivalence(rng):
    worst = 0.0
    above = 0
    for _ in range(100):
        P = random_convex(rng, int(rng.integers(3, 10)))
        exact = float(c_tr(P).value)
        polished, raw = dense_ctr(P)
        worst = max(worst, abs(polished - exact))
        above += raw > exact + 1e-12
    u = np.array([0.3, -0.5, 0.81])
    u /= np.linalg.norm(u)
    Q, _ = np.linalg.qr(np.random.default_rng(5).standard_normal((3, 3)))
    kinds = {
        "cube": bd.cube(),
        "simplex": bd.regular_simplex(),
        "polytope": bd.random_symmetric_polytope(3, 12, seed=2),
        "ball": bd.Ball(3, 0.7, (1.0, 2.0, 3.0)),
        "ellipsoid": bd.Ellipsoid((0.3, -1.0, 2.0), (0.7, 1.9, 2.8), Q),
    }
    sigmas = {}
    for name, B in kinds.items():
        area, se = bd.mc_shadow_area(B, u, samples=1_000_000, seed=3)
        sigmas[name] = abs(area - bd.brightness_nd(B, u)) / se
    record(
        f"11 oracles: dense sampling max gap {worst:.1e} ({above} samples above exact), shadow z-scores "
        + ", ".join(f"{k} {v:.2f}" for k, v in sigmas.items()),
        [("dense within 1e-10", worst <= 1e-10), ("no sample above exact", above == 0)]
        + [(f"{k} within 3 sigma", v <= 3) for k, v in sigmas.items()],
    )
