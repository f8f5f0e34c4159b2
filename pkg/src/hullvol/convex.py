"""Exact planar convex geometry over the rationals.

Coordinates are :class:`fractions.Fraction` throughout.  The same routines also
accept float coordinates (the "float-backed" path used by numerical searches);
nothing in here ever takes a square root, so rational inputs stay rational.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import (
    DegenerateInput,
    NotConvexPolygon,
    OriginNotInterior,
    ParseError,
    SingularMap,
    ZeroDirection,
)

Number = Union[Fraction, float, int]

# below this size a linear scan beats the bisect-and-repair lookups
_LINEAR_SCAN = 48


# ---------------------------------------------------------------------------
# numbers


def to_rational(value) -> Fraction:
    """Parse ``"p/q"``, a decimal string, an int or a Fraction.

    Floats are converted exactly (dyadic rationals); use :func:`rational_approx`
    for a short continued-fraction approximation instead.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"non-finite coordinate: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse rational {value!r}") from exc
    raise ParseError(f"cannot parse rational {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_approx(x: float, tol: float = 1e-9) -> Fraction:
    """Smallest-denominator continued-fraction convergent within ``tol`` of x."""
    target = Fraction(x)
    bound = Fraction(tol)
    den = 1
    while True:
        q = target.limit_denominator(den)
        if abs(q - target) <= bound:
            return q
        den *= 4


# ---------------------------------------------------------------------------
# vectors and directions


class Vec2(NamedTuple):
    x: Number
    y: Number

    def __add__(self, other):
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def __mul__(self, k):
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        # int / int would leave the exact path
        if isinstance(k, (int, Fraction)) and all(isinstance(c, (int, Fraction)) for c in self):
            k = Fraction(k)
        return Vec2(self.x / k, self.y / k)

    def dot(self, other) -> Number:
        return self.x * other.x + self.y * other.y

    def cross(self, other) -> Number:
        return self.x * other.y - self.y * other.x

    def rot90(self) -> "Vec2":
        return Vec2(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_float(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))


def vec(x, y) -> Vec2:
    return Vec2(to_rational(x), to_rational(y))


def _as_vec(v) -> Vec2:
    x, y = v
    if type(x) is int:
        x = Fraction(x)
    if type(y) is int:
        y = Fraction(y)
    return Vec2(x, y)


def _is_exact(v: Vec2) -> bool:
    return isinstance(v.x, (Fraction, int)) and isinstance(v.y, (Fraction, int))


@dataclass(frozen=True)
class Direction:
    """A nonzero direction vector.

    ``Direction.of(v)`` returns the canonical representative: the primitive
    integer vector with ``x > 0`` or ``x == 0, y > 0``.  Canonical directions
    identify v with -v and order lexicographically by their components.
    """

    v: Vec2
    canonical: bool = False

    def __post_init__(self):
        if not isinstance(self.v, Vec2):
            object.__setattr__(self, "v", Vec2(*self.v))
        if self.v.is_zero():
            raise ZeroDirection("direction must be nonzero")

    @classmethod
    def of(cls, v) -> "Direction":
        v = v if isinstance(v, Vec2) else Vec2(*v)
        if v.is_zero():
            raise ZeroDirection("direction must be nonzero")
        if not _is_exact(v):
            return cls(v, False)
        x, y = Fraction(v.x), Fraction(v.y)
        den = math.lcm(x.denominator, y.denominator)
        a, b = int(x * den), int(y * den)
        g = math.gcd(a, b)
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return cls(Vec2(Fraction(a), Fraction(b)), True)

    @property
    def key(self) -> tuple:
        return (self.v.x, self.v.y)

    def angle(self) -> float:
        return math.atan2(float(self.v.y), float(self.v.x))

    def unit(self) -> tuple[float, float]:
        x, y = self.v.to_float()
        r = math.hypot(x, y)
        return (x / r, y / r)


@dataclass(frozen=True)
class Line2:
    point: Vec2
    direction: Direction

    def __post_init__(self):
        if not isinstance(self.point, Vec2):
            object.__setattr__(self, "point", Vec2(*self.point))
        if not isinstance(self.direction, Direction):
            object.__setattr__(self, "direction", Direction(self.direction))

    def angle(self) -> float:
        """Direction angle folded into [0, pi)."""
        a = self.direction.angle() % math.pi
        return 0.0 if math.isclose(a, math.pi) else a


# ---------------------------------------------------------------------------
# polygons


def _winding_ok(verts: Sequence[Vec2]) -> bool:
    # all-left-turn vertex cycles can still wind more than once (pentagram)
    n = len(verts)
    total = 0.0
    for i in range(n):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
        e1, e2 = b - a, c - b
        total += math.atan2(float(e1.cross(e2)), float(e1.dot(e2)))
    return abs(total - 2 * math.pi) < 1.0


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """Strictly convex polygon, counterclockwise, starting at the lexicographic minimum.

    Construction validates the invariants and rotates the vertex list to the
    canonical start; it never repairs input.  Use :func:`hull2` to normalize
    arbitrary point sets.
    """

    vertices: tuple

    def __post_init__(self):
        verts = tuple(_as_vec(v) for v in self.vertices)
        n = len(verts)
        if n < 3:
            raise NotConvexPolygon(f"need at least 3 vertices, got {n}")
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            if (b - a).cross(c - b) <= 0:
                raise NotConvexPolygon(f"vertex {i} is not a strict left turn")
        if not _winding_ok(verts):
            raise NotConvexPolygon("vertex cycle winds more than once")
        start = min(range(n), key=lambda i: (verts[i].x, verts[i].y))
        object.__setattr__(self, "vertices", verts[start:] + verts[:start])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join(f"({_fmt(v.x)}, {_fmt(v.y)})" for v in self.vertices)
        return f"ConvexPolygon([{pts}])"

    @property
    def exact(self) -> bool:
        return all(_is_exact(v) for v in self.vertices)

    @cached_property
    def edges(self) -> tuple:
        vs = self.vertices
        n = len(vs)
        return tuple(vs[(i + 1) % n] - vs[i] for i in range(n))

    @cached_property
    def area(self) -> Number:
        vs = self.vertices
        n = len(vs)
        twice = sum(vs[i].cross(vs[(i + 1) % n]) for i in range(n))
        return twice / 2 if not self.exact else Fraction(twice) / 2

    @cached_property
    def difference(self) -> "ConvexPolygon":
        return minkowski_sum(self, point_reflect_origin(self))

    @cached_property
    def _edge_angles(self) -> list:
        out = []
        prev = None
        for e in self.edges:
            a = math.atan2(float(e.y), float(e.x))
            if prev is not None:
                while a < prev:
                    a += 2 * math.pi
            out.append(a)
            prev = a
        return out

    @cached_property
    def _vertex_angles(self) -> list:
        out = []
        prev = None
        for v in self.vertices:
            a = math.atan2(float(v.y), float(v.x))
            if prev is not None:
                while a < prev:
                    a += 2 * math.pi
            out.append(a)
            prev = a
        return out

    def to_float(self) -> list:
        return [v.to_float() for v in self.vertices]

    def contains_origin_strictly(self) -> bool:
        vs = self.vertices
        n = len(vs)
        return all(vs[i].cross(vs[(i + 1) % n]) > 0 for i in range(n))


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    return repr(x)


def polygon(points: Iterable) -> ConvexPolygon:
    """ConvexPolygon from coordinate pairs given as numbers or rational strings."""
    return ConvexPolygon(tuple(vec(*p) for p in points))


def _cross3(o: Vec2, a: Vec2, b: Vec2):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def hull2(points: Iterable) -> ConvexPolygon:
    """Convex hull by monotone chain; duplicates and collinear points are dropped."""
    pts = sorted({p if isinstance(p, Vec2) else Vec2(*p) for p in points})
    if len(pts) < 3:
        raise DegenerateInput("fewer than 3 distinct points")
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross3(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross3(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points are collinear")
    return ConvexPolygon(tuple(hull))


def area2(P: ConvexPolygon) -> Number:
    return P.area


def hull_area(points: Iterable) -> Number:
    return hull2(points).area


# ---------------------------------------------------------------------------
# support and radial queries


class Support(NamedTuple):
    value: Number
    indices: tuple


def _extreme_index(P: ConvexPolygon, w: Vec2) -> int:
    """Some vertex index maximizing w . x."""
    vs = P.vertices
    n = len(vs)
    if n <= _LINEAR_SCAN:
        best = 0
        bv = vs[0].dot(w)
        for i in range(1, n):
            d = vs[i].dot(w)
            if d > bv:
                best, bv = i, d
        return best
    angles = P._edge_angles
    tau = math.atan2(float(w.y), float(w.x)) + math.pi / 2
    base = angles[0]
    tau = base + (tau - base) % (2 * math.pi)
    j = bisect_left(angles, tau) % n
    edges = P.edges
    for _ in range(n):
        if edges[j].dot(w) > 0:
            j = (j + 1) % n
        elif edges[j - 1].dot(w) < 0:
            j = (j - 1) % n
        else:
            return j
    raise AssertionError("extreme vertex search did not converge")


def support2(P: ConvexPolygon, v) -> Support:
    """Raw support value max_x x.v with the achieving vertex (or edge) indices."""
    v = v if isinstance(v, Vec2) else Vec2(*v)
    if v.is_zero():
        raise ZeroDirection("support direction must be nonzero")
    i = _extreme_index(P, v)
    n = len(P)
    h = P.vertices[i].dot(v)
    idx = [i]
    if P[i + 1].dot(v) == h:
        idx.append((i + 1) % n)
    elif P[i - 1].dot(v) == h:
        idx.insert(0, (i - 1) % n)
    return Support(h, tuple(idx))


def support_value(P: ConvexPolygon, v: Vec2) -> Number:
    return P.vertices[_extreme_index(P, v)].dot(v)


def _ray_hit(P: ConvexPolygon, v: Vec2) -> tuple:
    """(edge index i, t) with t*v on edge [v_i, v_{i+1}]; origin must be interior."""
    vs = P.vertices
    n = len(vs)
    if n <= _LINEAR_SCAN:
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if a.cross(v) >= 0 and v.cross(b) > 0:
                e = b - a
                return i, a.cross(e) / v.cross(e)
        raise OriginNotInterior("ray does not leave the polygon; origin not interior")
    angles = P._vertex_angles
    base = angles[0]
    phi = math.atan2(float(v.y), float(v.x))
    phi = base + (phi - base) % (2 * math.pi)
    i = (bisect_left(angles, phi) - 1) % n
    for _ in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if a.cross(v) < 0:
            i = (i - 1) % n
        elif v.cross(b) <= 0:
            i = (i + 1) % n
        else:
            e = b - a
            return i, a.cross(e) / v.cross(e)
    raise OriginNotInterior("ray does not leave the polygon; origin not interior")


def radial_param(P: ConvexPolygon, v) -> Number:
    """t with t*v on the boundary of P (origin strictly interior)."""
    v = v if isinstance(v, Vec2) else Vec2(*v)
    if v.is_zero():
        raise ZeroDirection("ray direction must be nonzero")
    return _ray_hit(P, v)[1]


def boundary_point(P: ConvexPolygon, v) -> Vec2:
    """Scale v along its ray onto the boundary of P, exactly."""
    v = v if isinstance(v, Vec2) else Vec2(*v)
    return v * radial_param(P, v)


def max_chord_param(P: ConvexPolygon, v) -> Number:
    """Largest t >= 0 with x and x + t*v both in P.

    Equals the radial parameter of the difference body along v, so the
    longest chord parallel to v has length t*|v|.
    """
    v = v if isinstance(v, Vec2) else Vec2(*v)
    if v.is_zero():
        raise ZeroDirection("chord direction must be nonzero")
    return _ray_hit(P.difference, v)[1]


# ---------------------------------------------------------------------------
# sums, symmetrals, duals


def _bottom_index(vs: Sequence[Vec2]) -> int:
    return min(range(len(vs)), key=lambda i: (vs[i].y, vs[i].x))


def _drop_collinear(pts: list) -> list:
    out = list(pts)
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        for i in range(n):
            a, b, c = out[i - 1], out[i], out[(i + 1) % n]
            if b == a or _cross3(a, b, c) == 0:
                del out[i]
                changed = True
                break
    return out


def minkowski_sum(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """Exact Minkowski sum by merging the two edge sequences in angular order."""
    if not isinstance(P, ConvexPolygon) or not isinstance(Q, ConvexPolygon):
        raise TypeError("minkowski_sum expects two ConvexPolygons; use apply_motion to translate")
    pv, qv = P.vertices, Q.vertices
    n, m = len(pv), len(qv)
    a, b = _bottom_index(pv), _bottom_index(qv)
    i = j = 0
    out = []
    while i < n or j < m:
        out.append(pv[(a + i) % n] + qv[(b + j) % m])
        if i == n:
            j += 1
            continue
        if j == m:
            i += 1
            continue
        ep = pv[(a + i + 1) % n] - pv[(a + i) % n]
        eq = qv[(b + j + 1) % m] - qv[(b + j) % m]
        c = ep.cross(eq)
        if c > 0:
            i += 1
        elif c < 0:
            j += 1
        else:
            i += 1
            j += 1
    return ConvexPolygon(tuple(_drop_collinear(out)))


def point_reflect_origin(P: ConvexPolygon) -> ConvexPolygon:
    return ConvexPolygon(tuple(-v for v in P.vertices))


def difference_body(P: ConvexPolygon) -> ConvexPolygon:
    """P + (-P), unscaled."""
    return P.difference


def scale(P: ConvexPolygon, k) -> ConvexPolygon:
    if k <= 0:
        raise SingularMap("scale factor must be positive")
    return ConvexPolygon(tuple(v * k for v in P.vertices))


def central_symmetral(P: ConvexPolygon) -> ConvexPolygon:
    """(P - P)/2."""
    half = Fraction(1, 2) if P.exact else 0.5
    return scale(P.difference, half)


def polar_dual2(P: ConvexPolygon) -> ConvexPolygon:
    """Polar body; each edge on the line n.x = 1 becomes the vertex n."""
    if not P.contains_origin_strictly():
        raise OriginNotInterior("polar dual needs the origin strictly inside")
    vs = P.vertices
    k = len(vs)
    out = []
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        c = a.cross(b)
        if P.exact:
            c = Fraction(c)
        out.append(Vec2((b.y - a.y) / c, (a.x - b.x) / c))
    return ConvexPolygon(tuple(out))


# ---------------------------------------------------------------------------
# motions


@dataclass(frozen=True)
class Translate:
    v: Vec2


@dataclass(frozen=True)
class PointReflect:
    center: Vec2


@dataclass(frozen=True)
class LineReflect:
    line: Line2


@dataclass(frozen=True)
class LinearMap:
    matrix: tuple  # ((a, b), (c, d)) acting on column vectors


Motion = Union[Translate, PointReflect, LineReflect, LinearMap]


def reflection_matrix(d: Vec2) -> tuple:
    """Matrix of the reflection about the line through o with direction d."""
    dx, dy = d.x, d.y
    s = dx * dx + dy * dy
    if _is_exact(d):
        s = Fraction(s)
    c, t = (dx * dx - dy * dy) / s, (2 * dx * dy) / s
    return ((c, t), (t, -c))


def _apply_matrix(m, p: Vec2) -> Vec2:
    return Vec2(m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y)


def apply_motion(P: ConvexPolygon, motion: Motion) -> ConvexPolygon:
    """Image of P under a translation, point/line reflection or linear map."""
    flip = False
    if isinstance(motion, Translate):
        t = motion.v if isinstance(motion.v, Vec2) else Vec2(*motion.v)
        pts = [p + t for p in P.vertices]
    elif isinstance(motion, PointReflect):
        c = motion.center if isinstance(motion.center, Vec2) else Vec2(*motion.center)
        pts = [c * 2 - p for p in P.vertices]
    elif isinstance(motion, LineReflect):
        c = motion.line.point
        R = reflection_matrix(motion.line.direction.v)
        pts = [c + _apply_matrix(R, p - c) for p in P.vertices]
        flip = True
    elif isinstance(motion, LinearMap):
        (a, b), (c, d) = motion.matrix
        det = a * d - b * c
        if det == 0:
            raise SingularMap("linear map is singular")
        pts = [_apply_matrix(motion.matrix, p) for p in P.vertices]
        flip = det < 0
    else:
        raise TypeError(f"unknown motion {motion!r}")
    if flip:
        pts.reverse()
    return ConvexPolygon(tuple(pts))


def translate(P: ConvexPolygon, v) -> ConvexPolygon:
    return apply_motion(P, Translate(v if isinstance(v, Vec2) else Vec2(*v)))


def point_reflect(P: ConvexPolygon, center) -> ConvexPolygon:
    return apply_motion(P, PointReflect(center if isinstance(center, Vec2) else Vec2(*center)))


def line_reflect(P: ConvexPolygon, line: Line2) -> ConvexPolygon:
    return apply_motion(P, LineReflect(line))


def linear_map(P: ConvexPolygon, matrix) -> ConvexPolygon:
    return apply_motion(P, LinearMap(tuple(tuple(r) for r in matrix)))


def steiner2(P: ConvexPolygon, axis) -> ConvexPolygon:
    """Steiner symmetral about the line through o spanned by ``axis``.

    Chords of P perpendicular to the axis are re-centred on it.  Coordinates
    are taken as s = a.x and t = a_perp.x with the raw axis vector a, which
    keeps everything rational for any rational axis.
    """
    a = axis.v if isinstance(axis, Direction) else (axis if isinstance(axis, Vec2) else Vec2(*axis))
    if a.is_zero():
        raise ZeroDirection("symmetrization axis must be nonzero")
    ap = a.rot90()
    q = a.dot(a)
    exact = P.exact and _is_exact(a)
    if exact:
        q = Fraction(q)
    st = [(v.dot(a), v.dot(ap)) for v in P.vertices]
    n = len(st)
    half_const = Fraction(1, 2) if exact else 0.5
    pts = []
    for s in sorted({s for s, _ in st}):
        lo = hi = None
        for i in range(n):
            (s0, t0), (s1, t1) = st[i], st[(i + 1) % n]
            if min(s0, s1) <= s <= max(s0, s1):
                if s0 == s1:
                    ts = (t0, t1)
                else:
                    ts = (t0 + (s - s0) * (t1 - t0) / (s1 - s0),)
                for t in ts:
                    lo = t if lo is None or t < lo else lo
                    hi = t if hi is None or t > hi else hi
        half = (hi - lo) * half_const
        for t in (half, -half):
            pts.append(Vec2((a.x * s + ap.x * t) / q, (a.y * s + ap.y * t) / q))
    return hull2(pts)


# ---------------------------------------------------------------------------
# constructors


def regular_polygon(m: int, radius=1, tol: float = 1e-9, phase: float = 0.0) -> ConvexPolygon:
    """Rational approximation of the regular m-gon; each coordinate within tol."""
    if m < 3:
        raise DegenerateInput("regular polygon needs m >= 3")
    r = float(radius)
    pts = []
    for k in range(m):
        th = phase + 2 * math.pi * k / m
        pts.append(Vec2(rational_approx(r * math.cos(th), tol), rational_approx(r * math.sin(th), tol)))
    try:
        return ConvexPolygon(tuple(pts))
    except NotConvexPolygon as exc:
        raise DegenerateInput(f"tolerance {tol} too coarse for a regular {m}-gon") from exc


def unit_square() -> ConvexPolygon:
    return polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def reuleaux_polygon(arc_points: int = 64, sides: int = 3, width: float = 1.0) -> ConvexPolygon:
    """Float polygon inscribed in the Reuleaux polygon of the given width.

    Each arc is centred at the opposite corner of a regular odd polygon and
    sampled at ``arc_points`` + 1 points (endpoints shared).
    """
    if sides < 3 or sides % 2 == 0:
        raise DegenerateInput("Reuleaux polygons need an odd number of sides >= 3")
    if arc_points < 1:
        raise DegenerateInput("need at least one point per arc")
    # circumradius of the regular odd polygon whose diagonals have length width
    R = width / (2 * math.sin(math.pi * (sides - 1) / (2 * sides)))
    corners = [(R * math.cos(2 * math.pi * k / sides), R * math.sin(2 * math.pi * k / sides)) for k in range(sides)]
    half = (sides - 1) // 2
    pts = []
    for k in range(sides):
        # arc from corner k to corner k+1, centred at the corner opposite them
        cx, cy = corners[(k + half + 1) % sides]
        a0 = math.atan2(corners[k][1] - cy, corners[k][0] - cx)
        a1 = math.atan2(corners[(k + 1) % sides][1] - cy, corners[(k + 1) % sides][0] - cx)
        span = (a1 - a0) % (2 * math.pi)
        for j in range(arc_points):
            a = a0 + span * j / arc_points
            pts.append(Vec2(cx + width * math.cos(a), cy + width * math.sin(a)))
    return ConvexPolygon(tuple(pts))
