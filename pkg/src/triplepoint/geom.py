"""Exact rational geometry kernel: directions on a circle, oriented lines,
clockwise arcs, and the sign-based predicates everything else is built on.

All predicates reduce to signs of integer cross and dot products of
canonicalized direction vectors; no floating point, no square roots, no
angles. Clockwise means the direction of decreasing standard angle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Optional, Sequence

from .errors import (
    ContractViolation,
    DegenerateConfiguration,
    DegenerateQuery,
    DegenerateTriple,
)

Rat = Fraction


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, eq=False)
class CirclePoint:
    """A point of the unit circle, represented by an unnormalized nonzero
    rational direction vector. Two CirclePoints are equal iff their
    directions are positive multiples of each other.
    """

    dx: Fraction
    dy: Fraction
    ix: int = field(init=False, repr=False, compare=False)
    iy: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        dx = _rat(self.dx)
        dy = _rat(self.dy)
        if dx == 0 and dy == 0:
            raise DegenerateConfiguration("direction vector must be nonzero")
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)
        # Reduced integer direction; invariant under positive rescaling.
        ax = dx.numerator * dy.denominator
        ay = dy.numerator * dx.denominator
        g = gcd(abs(ax), abs(ay))
        object.__setattr__(self, "ix", ax // g)
        object.__setattr__(self, "iy", ay // g)

    @property
    def canonical(self) -> tuple[int, int]:
        return (self.ix, self.iy)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CirclePoint):
            return NotImplemented
        return self.ix == other.ix and self.iy == other.iy

    def __hash__(self) -> int:
        return hash((self.ix, self.iy))

    def antipode(self) -> "CirclePoint":
        return CirclePoint(-self.dx, -self.dy)

    def is_antipodal_to(self, other: "CirclePoint") -> bool:
        return self.ix == -other.ix and self.iy == -other.iy

    def __repr__(self) -> str:
        return f"CirclePoint({self.dx}, {self.dy})"


def cross(u: CirclePoint, v: CirclePoint) -> Fraction:
    """Exact cross product dx_u*dy_v - dy_u*dx_v of the raw directions."""
    return u.dx * v.dy - u.dy * v.dx


def dot(u: CirclePoint, v: CirclePoint) -> Fraction:
    return u.dx * v.dx + u.dy * v.dy


def icross(u: CirclePoint, v: CirclePoint) -> int:
    """Integer cross product of the canonical directions; same sign as
    cross(u, v)."""
    return u.ix * v.iy - u.iy * v.ix


def idot(u: CirclePoint, v: CirclePoint) -> int:
    return u.ix * v.ix + u.iy * v.iy


@dataclass(frozen=True)
class TripleVerdict:
    """Outcome of classify_triple: bounding, or unbounding with the
    position (0..2) of the middle point among the arguments."""

    bounding: bool
    middle: Optional[int] = None

    def __post_init__(self):
        if self.bounding != (self.middle is None):
            raise ValueError("middle must be set exactly when unbounding")


def classify_triple(p: CirclePoint, q: CirclePoint, r: CirclePoint) -> TripleVerdict:
    """Classify three pairwise distinct, pairwise non-antipodal circle
    points: bounding iff their triangle strictly contains the circle
    center, otherwise unbounding with a unique middle point (the one
    strictly inside the cone positively spanned by the other two).
    """
    pts = (p, q, r)
    c01 = icross(p, q)
    c12 = icross(q, r)
    c20 = icross(r, p)
    if c01 == 0 or c12 == 0 or c20 == 0:
        raise DegenerateTriple("triple contains an equal or antipodal pair")
    if (c01 > 0 and c12 > 0 and c20 > 0) or (c01 < 0 and c12 < 0 and c20 < 0):
        return TripleVerdict(bounding=True)
    hits = []
    for i in range(3):
        x = pts[i]
        u = pts[(i + 1) % 3]
        v = pts[(i + 2) % 3]
        # x = a*u + b*v with a, b > 0 iff cross(x,v) and cross(u,x)
        # carry the sign of cross(u,v).
        d = icross(u, v)
        if icross(x, v) * d > 0 and icross(u, x) * d > 0:
            hits.append(i)
    if len(hits) != 1:
        raise ContractViolation(
            f"middle-cone test matched {len(hits)} points for an unbounding triple"
        )
    return TripleVerdict(bounding=False, middle=hits[0])


@dataclass(frozen=True)
class Arc:
    """The clockwise arc from `start` to `end`; endpoints must be distinct
    and non-antipodal, so the arc is strictly shorter than the full circle
    and never exactly a semicircle."""

    start: CirclePoint
    end: CirclePoint

    def __post_init__(self):
        if icross(self.start, self.end) == 0:
            raise DegenerateQuery("arc endpoints are equal or antipodal")


def _in_ccw_open_arc(a: CirclePoint, b: CirclePoint, x: CirclePoint) -> bool:
    # Membership of x in the open counterclockwise arc from a to b.
    c_ab = icross(a, b)
    c_ax = icross(a, x)
    c_xb = icross(x, b)
    if c_ax == 0 or c_xb == 0:
        raise DegenerateQuery("query point equals or opposes an arc endpoint")
    if c_ab > 0:
        return c_ax > 0 and c_xb > 0
    return c_ax > 0 or c_xb > 0


def in_clockwise_arc(x: CirclePoint, arc: Arc) -> bool:
    """True iff x lies strictly inside the clockwise arc."""
    # Clockwise from start to end sweeps the same set as counterclockwise
    # from end to start.
    return _in_ccw_open_arc(arc.end, arc.start, x)


def arc_contains_closed(x: CirclePoint, arc: Arc) -> bool:
    """True iff x lies on the closed clockwise arc (endpoints included)."""
    if x == arc.start or x == arc.end:
        return True
    return in_clockwise_arc(x, arc)


def sweep_is_short(u: CirclePoint, v: CirclePoint) -> bool:
    """True iff the clockwise sweep from u to v is less than a half turn."""
    c = icross(u, v)
    if c == 0:
        raise DegenerateQuery("sweep between equal or antipodal points")
    return c < 0


@dataclass(frozen=True)
class CutPosition:
    """A gap in a circular order: the space immediately clockwise after
    the point with index `after`. Cuts are combinatorial, never
    coordinates."""

    after: int


def _validate_directions(points: Sequence[CirclePoint]) -> None:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if icross(points[i], points[j]) == 0:
                kind = "equal" if points[i] == points[j] else "antipodal"
                raise DegenerateConfiguration(
                    f"points {i} and {j} are {kind}"
                )


def clockwise_cycle(points: Sequence[CirclePoint]) -> list[int]:
    """Indices of `points` in clockwise cyclic order, starting at index 0.

    Requires pairwise distinct, pairwise non-antipodal points (checked).
    """
    _validate_directions(points)
    if not points:
        return []
    ref = points[0]

    def half(u: CirclePoint) -> int:
        # 0 for the first clockwise half turn after ref, 1 for the second.
        return 0 if icross(ref, u) < 0 else 1

    def cmp(i: int, j: int) -> int:
        hi = half(points[i])
        hj = half(points[j])
        if hi != hj:
            return -1 if hi < hj else 1
        return -1 if icross(points[i], points[j]) < 0 else 1

    rest = sorted(range(1, len(points)), key=cmp_to_key(cmp))
    return [0] + rest


def circular_order(points: Sequence[CirclePoint], cut: CutPosition) -> list[int]:
    """Indices sorted clockwise starting immediately after the cut gap."""
    cyc = clockwise_cycle(points)
    pos = cyc.index(cut.after)
    return cyc[pos + 1 :] + cyc[: pos + 1]


@dataclass(frozen=True, eq=False)
class Line2:
    """An oriented rational line a*x + b*y = c. Positive rescaling of all
    three coefficients keeps the same oriented line."""

    a: Fraction
    b: Fraction
    c: Fraction
    ia: int = field(init=False, repr=False, compare=False)
    ib: int = field(init=False, repr=False, compare=False)
    ic: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a = _rat(self.a)
        b = _rat(self.b)
        c = _rat(self.c)
        if a == 0 and b == 0:
            raise DegenerateConfiguration("line normal must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        # Reduced integer coefficients, positive-scale invariant.
        den = a.denominator * b.denominator * c.denominator
        ia = a.numerator * (den // a.denominator)
        ib = b.numerator * (den // b.denominator)
        ic = c.numerator * (den // c.denominator)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        object.__setattr__(self, "ia", ia // g)
        object.__setattr__(self, "ib", ib // g)
        object.__setattr__(self, "ic", ic // g)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Line2):
            return NotImplemented
        return (self.ia, self.ib, self.ic) == (other.ia, other.ib, other.ic)

    def __hash__(self) -> int:
        return hash((self.ia, self.ib, self.ic))

    def eval_at(self, x: Fraction, y: Fraction) -> Fraction:
        """a*x + b*y - c with the reduced integer coefficients; zero iff
        (x, y) is on the line, sign selects a side."""
        return self.ia * x + self.ib * y - self.ic

    def is_parallel_to(self, other: "Line2") -> bool:
        return self.ia * other.ib - self.ib * other.ia == 0

    def intersection(self, other: "Line2") -> Optional[tuple[Fraction, Fraction]]:
        det = self.ia * other.ib - self.ib * other.ia
        if det == 0:
            return None
        x = Fraction(self.ic * other.ib - self.ib * other.ic, det)
        y = Fraction(self.ia * other.ic - self.ic * other.ia, det)
        return (x, y)

    @staticmethod
    def through(p: tuple[Fraction, Fraction], q: tuple[Fraction, Fraction]) -> "Line2":
        px, py = _rat(p[0]), _rat(p[1])
        qx, qy = _rat(q[0]), _rat(q[1])
        a = py - qy
        b = qx - px
        return Line2(a, b, a * px + b * py)

    def __repr__(self) -> str:
        return f"Line2({self.a}, {self.b}, {self.c})"
