from fractions import Fraction as F

import numpy as np
import pytest

from hullvol.convex import Direction, area2, hull2, linear_map, polygon, regular_polygon, steiner2, translate
from hullvol.functionals import c_0, c_tr, hull_area_union
from hullvol.samples import random_convex, random_direction
from hullvol.search import (
    EXPERIMENTAL_BANNER,
    KNOWN_FLOORS,
    SearchConfig,
    affine_normalize,
    c0_float,
    ctr_float,
    is_rhombus,
    minimize_functional,
    random_polygon,
    regularity_deviation,
    restart_seeds,
    side_deviation,
    similarity_normalize,
)


def arr(P):
    return np.array(P.to_float())


class TestConfig:
    @pytest.mark.parametrize("kw", [{"m": 2}, {"m": 5, "restarts": 0}, {"m": 5, "tol": 0}, {"m": 5, "functional": "c2"}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            SearchConfig(**kw)


class TestRandomPolygon:
    def test_deterministic(self):
        assert random_polygon(3, 1) == random_polygon(3, 1)
        assert random_polygon(3, 1) != random_polygon(3, 2)

    def test_vertex_count(self):
        assert len(random_polygon(5, 2)) == 5
        P = random_polygon(64, 3)
        assert len(P) == 64 and hull2(P.vertices) == P

    def test_restart_seeds_prefix_stable(self):
        assert restart_seeds(7, 5)[:3] == restart_seeds(7, 3)


class TestNormalisation:
    def test_parallelogram_becomes_square(self):
        P = polygon([(0, 0), (4, 1), (5, 3), (1, 2)])
        X = arr(affine_normalize(P))
        sides = np.linalg.norm(np.roll(X, -1, axis=0) - X, axis=1)
        diags = [np.linalg.norm(X[2] - X[0]), np.linalg.norm(X[3] - X[1])]
        assert np.ptp(sides) <= 1e-9 and abs(diags[0] - diags[1]) <= 1e-9
        assert float(area2(affine_normalize(P))) == pytest.approx(1.0, abs=1e-9)

    def test_regular_pentagon_keeps_shape(self):
        X = arr(affine_normalize(regular_polygon(5)))
        r = np.linalg.norm(X - X.mean(axis=0), axis=1)
        assert np.ptp(r) <= 1e-9

    def test_idempotent(self, rng):
        P = affine_normalize(random_convex(rng, 6))
        assert np.abs(arr(affine_normalize(P)) - arr(P)).max() <= 1e-9

    def test_functionals_unchanged(self, rng):
        P = random_convex(rng, 6)
        Q = affine_normalize(P)
        assert ctr_float(arr(Q)) == pytest.approx(float(c_tr(P).value), abs=1e-9)
        assert c0_float(arr(Q)) == pytest.approx(float(c_0(P).value), abs=1e-9)

    def test_similarity_keeps_angles(self, rng):
        P = random_convex(rng, 5)
        X, Y = arr(P), arr(similarity_normalize(P))
        ang = lambda Z: np.angle(np.diff(Z[:, 0] + 1j * Z[:, 1], append=Z[:1, 0] + 1j * Z[:1, 1]))  # noqa: E731
        assert np.allclose(np.diff(ang(X)), np.diff(ang(Y)), atol=1e-9)


class TestRegularity:
    def test_regular_pentagon(self):
        assert regularity_deviation(regular_polygon(5)) <= 1e-9

    def test_affine_image(self):
        assert regularity_deviation(linear_map(regular_polygon(5), ((3, 1), (F(1, 2), 2)))) <= 1e-9

    def test_irregular(self, rng):
        assert regularity_deviation(random_convex(rng, 5)) > 0

    def test_triangle_rejected(self):
        with pytest.raises(ValueError):
            regularity_deviation(regular_polygon(3))

    def test_rhombus(self):
        assert is_rhombus(polygon([(0, 0), (2, -1), (4, 0), (2, 1)]))
        assert not is_rhombus(polygon([(0, 0), (3, 0), (3, 1), (0, 1)]))
        assert side_deviation(regular_polygon(6)) <= 1e-9


class TestFloatObjectives:
    def test_match_exact(self, rng):
        for _ in range(20):
            P = random_convex(rng, int(rng.integers(3, 8)))
            assert ctr_float(arr(P)) == pytest.approx(float(c_tr(P).value), abs=1e-9)
            assert c0_float(arr(P)) == pytest.approx(float(c_0(P).value), abs=1e-9)


class TestSearch:
    def test_pentagon_translates(self):
        r = minimize_functional(SearchConfig(m=5, functional="tr", restarts=3, seed=7))
        t5 = KNOWN_FLOORS[("tr", 5)]
        assert t5 - 1e-6 <= r.value <= t5 + 1e-4
        assert r.regularity <= 1e-3
        assert r.best.exact and r.exact_value is not None

    def test_triangle_line_reflections(self):
        r = minimize_functional(SearchConfig(m=3, functional="c1", restarts=2, seed=1))
        assert abs(r.value - 4) <= 1e-3
        assert side_deviation(r.best) <= 1e-2

    def test_pentagon_point_reflections(self):
        r = minimize_functional(SearchConfig(m=5, functional="c0", restarts=5, seed=7))
        p5 = KNOWN_FLOORS[("c0", 5)]
        assert p5 - 1e-6 <= r.value <= p5 + 1e-4
        assert r.regularity <= 1e-3

    def test_quadrilateral_line_reflections_rhombus(self):
        r = minimize_functional(SearchConfig(m=4, functional="c1", restarts=3, seed=0))
        assert abs(r.value - 3) <= 1e-3
        assert is_rhombus(r.best)

    def test_per_restart_sorted_and_consistent(self):
        r = minimize_functional(SearchConfig(m=4, functional="tr", restarts=4, seed=3))
        vals = [v for _, v in r.per_restart]
        assert vals == sorted(vals)
        assert abs(r.value - vals[0]) <= 1e-8
        assert len(r.per_restart) == 4

    def test_more_restarts_never_worse(self):
        few = minimize_functional(SearchConfig(m=5, functional="c0", restarts=2, seed=11))
        more = minimize_functional(SearchConfig(m=5, functional="c0", restarts=4, seed=11))
        assert more.per_restart[0][1] <= few.per_restart[0][1]

    def test_experimental_banner(self):
        r = minimize_functional(SearchConfig(m=6, functional="tr", restarts=1, seed=0, max_iters=300))
        assert r.experimental and EXPERIMENTAL_BANNER in r.notes

    def test_deterministic(self):
        cfg = SearchConfig(m=4, functional="c0", restarts=2, seed=5)
        a, b = minimize_functional(cfg), minimize_functional(cfg)
        assert a.exact_value == b.exact_value and a.best == b.best


class TestMonotonicity:
    def test_steiner(self, rng):
        for _ in range(30):
            P = random_convex(rng, int(rng.integers(3, 8)))
            S = steiner2(P, Direction.of(random_direction(rng)))
            assert area2(S) == area2(P)
            assert c_tr(S).value <= c_tr(P).value

    def test_midpoint_convexity(self, rng):
        for _ in range(50):
            P = random_convex(rng, int(rng.integers(3, 8)))
            v1, v2 = random_direction(rng, 20), random_direction(rng, 20)
            mid = (v1 + v2) * F(1, 2)
            lhs = hull_area_union(P, translate(P, mid))
            assert 2 * lhs <= hull_area_union(P, translate(P, v1)) + hull_area_union(P, translate(P, v2))
