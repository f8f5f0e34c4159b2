"""Hypothesis strategies for exact planar inputs."""
from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from hullvol.convex import Vec2, hull2
from hullvol.errors import DegenerateInput, NotConvexPolygon

coord = st.fractions(min_value=-20, max_value=20, max_denominator=12)
point = st.builds(Vec2, coord, coord)


@st.composite
def polygons(draw, min_points=3, max_points=9):
    pts = draw(st.lists(point, min_size=min_points, max_size=max_points, unique=True))
    try:
        return hull2(pts)
    except (DegenerateInput, NotConvexPolygon):
        assume(False)


@st.composite
def directions(draw):
    a = draw(st.integers(-30, 30))
    b = draw(st.integers(-30, 30))
    assume(a or b)
    return Vec2(Fraction(a), Fraction(b))


@st.composite
def symmetric_polygons(draw):
    pts = draw(st.lists(point, min_size=2, max_size=5, unique=True))
    try:
        return hull2(pts + [-p for p in pts])
    except (DegenerateInput, NotConvexPolygon):
        assume(False)
