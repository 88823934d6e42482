"""Verifier for the bundled three-dimensional example: eight rational
planes tangent to the unit sphere, four color classes of two, and a
per-partition sign-vector certificate that the two simplices of every
colorful partition are disjoint."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import ContractViolation, GeneralPositionViolation
from .geom import _rat

Point3 = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Plane3:
    """A rational plane a*x + b*y + c*z = d."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _rat(getattr(self, name)))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise GeneralPositionViolation("plane normal must be nonzero")

    def eval_at(self, p: Point3) -> Fraction:
        return self.a * p[0] + self.b * p[1] + self.c * p[2] - self.d

    @property
    def normal(self) -> Point3:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class SignVector:
    """Per-plane closed-side choices: +1 is the side away from the origin,
    -1 the side containing it, 0 unconstrained."""

    entries: tuple[int, ...]

    def __add__(self, other: "SignVector") -> "SignVector":
        return SignVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "SignVector":
        return SignVector(tuple(-e for e in self.entries))

    def restrict(self, indices: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.entries[i] for i in indices)

    def __str__(self) -> str:
        symbol = {1: "+", -1: "-", 0: "0"}
        return "(" + ",".join(symbol[e] for e in self.entries) + ")"


# Tangency points on the upper unit hemisphere; plane i is tangent at
# point i, so its equation is p . x = 1.
TANGENT_POINTS: tuple[Point3, ...] = (
    (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)),
    (Fraction(7, 9), Fraction(-4, 9), Fraction(4, 9)),
    (Fraction(6, 7), Fraction(2, 7), Fraction(3, 7)),
    (Fraction(17, 19), Fraction(6, 19), Fraction(6, 19)),
    (Fraction(1, 3), Fraction(-2, 3), Fraction(2, 3)),
    (Fraction(2, 3), Fraction(-2, 3), Fraction(1, 3)),
    (Fraction(6, 7), Fraction(3, 7), Fraction(2, 7)),
    (Fraction(-2, 7), Fraction(3, 7), Fraction(6, 7)),
)

# Color classes over plane indices 0..7 (two planes per color).
PLANE_COLORING: tuple[int, ...] = (1, 2, 3, 4, 1, 2, 3, 4)


def builtin_tangent_planes() -> tuple[tuple[Plane3, ...], tuple[int, ...]]:
    """The bundled eight tangent planes with their 4-coloring."""
    planes = tuple(Plane3(p[0], p[1], p[2], Fraction(1)) for p in TANGENT_POINTS)
    return planes, PLANE_COLORING


def _det3(r0: Point3, r1: Point3, r2: Point3) -> Fraction:
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def _cross3(u: Point3, v: Point3) -> Point3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def plane_triple_point(p0: Plane3, p1: Plane3, p2: Plane3) -> Optional[Point3]:
    """The unique common point of three planes, or None if the normals are
    dependent."""
    det = _det3(p0.normal, p1.normal, p2.normal)
    if det == 0:
        return None
    dx = _det3(
        (p0.d, p0.b, p0.c), (p1.d, p1.b, p1.c), (p2.d, p2.b, p2.c)
    )
    dy = _det3(
        (p0.a, p0.d, p0.c), (p1.a, p1.d, p1.c), (p2.a, p2.d, p2.c)
    )
    dz = _det3(
        (p0.a, p0.b, p0.d), (p1.a, p1.b, p1.d), (p2.a, p2.b, p2.d)
    )
    return (dx / det, dy / det, dz / det)


HalfspaceSystem = Sequence[tuple[Plane3, int]]


def halfspace_system_point(constraints: HalfspaceSystem) -> Optional[Point3]:
    """An exact point satisfying every closed halfspace constraint, or
    None. All triples of boundary normals here are independent, so a
    nonempty region is pointed and has a vertex on three boundary
    planes; every triple intersection is tested."""
    for ia, ib, ic in combinations(range(len(constraints)), 3):
        v = plane_triple_point(constraints[ia][0], constraints[ib][0], constraints[ic][0])
        if v is None:
            continue
        if all(side * plane.eval_at(v) >= 0 for plane, side in constraints):
            return v
    return None


def _recession_direction(constraints: HalfspaceSystem) -> Optional[Point3]:
    """A nonzero direction in the recession cone, or None if the cone is
    trivial. Extreme rays of the pointed cone lie on two boundary planes,
    so normal cross products cover all candidates."""
    for ia, ib in combinations(range(len(constraints)), 2):
        d0 = _cross3(constraints[ia][0].normal, constraints[ib][0].normal)
        if d0 == (0, 0, 0):
            continue
        for s in (1, -1):
            d = (s * d0[0], s * d0[1], s * d0[2])
            if all(
                side * (plane.a * d[0] + plane.b * d[1] + plane.c * d[2]) >= 0
                for plane, side in constraints
            ):
                return d
    return None


def bounded_simplex_sign_vector(
    planes: Sequence[Plane3], quad: Sequence[int]
) -> SignVector:
    """The unique closed-side pattern on four planes whose region is a
    bounded nonempty simplex; all other entries are 0."""
    quad = tuple(quad)
    chosen = [planes[i] for i in quad]
    for trio in combinations(chosen, 3):
        if plane_triple_point(*trio) is None:
            raise GeneralPositionViolation(
                f"planes {quad} have dependent normals"
            )
    p123 = plane_triple_point(chosen[0], chosen[1], chosen[2])
    assert p123 is not None
    if chosen[3].eval_at(p123) == 0:
        raise GeneralPositionViolation(f"planes {quad} share a common point")

    winners = []
    for pattern in product((1, -1), repeat=4):
        constraints = list(zip(chosen, pattern))
        if halfspace_system_point(constraints) is None:
            continue
        if _recession_direction(constraints) is not None:
            continue
        winners.append(pattern)
    if len(winners) != 1:
        raise ContractViolation(
            f"{len(winners)} bounded nonempty sign patterns for planes {quad}"
        )
    entries = [0] * len(planes)
    for i, s in zip(quad, winners[0]):
        entries[i] = s
    return SignVector(tuple(entries))


# Verified partition table: each row is a colorful partition written as
# (first part, second part), the expected entrywise sum of the two
# bounded-simplex sign vectors, and the quadruple certifying disjointness.
# Indices are 0-based (plane h_i has index i-1).
TABLE_ROWS: tuple[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...] = (
    ((0, 1, 2, 3, 4, 5, 6, 7), (-1, -1, 1, -1, 1, -1, 1, -1), (0, 1, 4, 6)),
    ((0, 1, 2, 7, 4, 5, 6, 3), (1, 1, -1, 1, -1, -1, -1, -1), (0, 1, 2, 3)),
    ((0, 1, 6, 3, 4, 5, 2, 7), (1, -1, 1, 1, 1, -1, -1, -1), (1, 3, 4, 7)),
    ((0, 1, 6, 7, 4, 5, 2, 3), (1, 1, 1, -1, -1, 1, -1, -1), (0, 3, 4, 5)),
    ((0, 5, 2, 3, 4, 1, 6, 7), (-1, 1, 1, -1, -1, -1, -1, 1), (0, 1, 4, 7)),
    ((0, 5, 2, 7, 4, 1, 6, 3), (-1, -1, 1, 1, 1, -1, -1, 1), (0, 1, 2, 7)),
    ((0, 5, 6, 3, 4, 1, 2, 7), (-1, -1, 1, 1, 1, -1, -1, -1), (0, 1, 3, 4)),
    ((0, 5, 6, 7, 4, 1, 2, 3), (1, 1, 1, -1, -1, 1, -1, -1), (0, 3, 4, 5)),
)


@dataclass(frozen=True)
class TableRowResult:
    partition: tuple[int, ...]
    computed_sum: SignVector
    expected_sum: SignVector
    quad: tuple[int, ...]
    sum_ok: bool
    quad_ok: bool
    disjoint_ok: bool

    @property
    def ok(self) -> bool:
        return self.sum_ok and self.quad_ok and self.disjoint_ok


@dataclass(frozen=True)
class TableReport:
    rows: tuple[TableRowResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def verify_table() -> TableReport:
    """Recompute every row of the partition table: the sign-vector sum,
    the printed disjointness quadruple, and an independent exact check
    that the two bounded simplices share no point."""
    planes, _ = builtin_tangent_planes()
    rows = []
    for row, expected_sum, quad in TABLE_ROWS:
        first, second = row[:4], row[4:]
        v1 = bounded_simplex_sign_vector(planes, first)
        v2 = bounded_simplex_sign_vector(planes, second)
        total = v1 + v2
        vq = bounded_simplex_sign_vector(planes, quad)
        sum_ok = total.entries == expected_sum
        quad_ok = total.restrict(quad) == (-vq).restrict(quad)
        combined = [
            (planes[i], s) for i, s in zip(first, v1.restrict(first))
        ] + [(planes[i], s) for i, s in zip(second, v2.restrict(second))]
        disjoint_ok = halfspace_system_point(combined) is None
        rows.append(
            TableRowResult(
                partition=row,
                computed_sum=total,
                expected_sum=SignVector(expected_sum),
                quad=quad,
                sum_ok=sum_ok,
                quad_ok=quad_ok,
                disjoint_ok=disjoint_ok,
            )
        )
    return TableReport(rows=tuple(rows))


@dataclass(frozen=True)
class ConvexPosition3DReport:
    ok: bool
    bad_triples: tuple[tuple[int, int, int], ...]
    bad_quads: tuple[tuple[int, int, int, int], ...]
    bad_tangencies: tuple[tuple[int, int], ...]


def verify_convex_position_3d() -> ConvexPosition3DReport:
    """Exact general-position and convex-position certificate for the
    bundled planes: every three meet in one point, every four in none,
    and each tangency point strictly satisfies all other planes'
    origin-side constraints."""
    planes, _ = builtin_tangent_planes()
    bad_triples = []
    bad_quads = []
    bad_tangencies = []
    for trio in combinations(range(8), 3):
        if plane_triple_point(*(planes[i] for i in trio)) is None:
            bad_triples.append(trio)
    if not bad_triples:
        for quad in combinations(range(8), 4):
            p = plane_triple_point(*(planes[i] for i in quad[:3]))
            assert p is not None
            if planes[quad[3]].eval_at(p) == 0:
                bad_quads.append(quad)
    for i, point in enumerate(TANGENT_POINTS):
        for j, plane in enumerate(planes):
            if i != j and plane.eval_at(point) >= 0:
                bad_tangencies.append((i, j))
    return ConvexPosition3DReport(
        ok=not bad_triples and not bad_quads and not bad_tangencies,
        bad_triples=tuple(bad_triples),
        bad_quads=tuple(bad_quads),
        bad_tangencies=tuple(bad_tangencies),
    )
