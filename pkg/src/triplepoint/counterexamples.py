"""Verifiers for the bundled plane examples: the six-line set on which
every colorful partition gives two disjoint triangles, the octahedron
facet-cover parity search behind its scaled-up variants, and the six-line
set that is not in convex position yet admits an intersecting colorful
partition for every coloring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Optional, Sequence

from .coloring import Coloring, enumerate_colorful_partitions
from .errors import CapExceeded, NotConvexPosition
from .geom import Line2
from .lines import (
    Point2,
    feasible_point,
    find_witness_cell,
    triangle_constraints,
    validate_general_position,
)

Fr = Fraction


def _line(p, q) -> Line2:
    return Line2.through(
        (Fr(p[0]), Fr(p[1])), (Fr(q[0]), Fr(q[1]))
    )


def counterexample_six_lines() -> tuple[tuple[Line2, ...], Coloring]:
    """Six colored lines (two red, two blue, two green) whose four
    colorful partitions all produce disjoint triangle pairs."""
    lines = (
        _line((-3, 0), (4, 0)),                      # l1, red
        _line((-3, Fr(5, 2)), (4, Fr(-1, 2))),       # l2, blue
        _line((Fr(-5, 2), Fr(-5, 2)), (Fr(1, 2), Fr(7, 2))),  # l3, green
        _line((0, Fr(7, 2)), (0, -3)),               # l4, red
        _line((-2, 3), (Fr(1, 2), -3)),              # l5, blue
        _line((-3, -2), (3, 1)),                     # l6, green
    )
    coloring = Coloring((1, 2, 3, 1, 2, 3))
    return lines, coloring


def triangles_common_point(
    lines_a: Sequence[Line2], lines_b: Sequence[Line2]
) -> Optional[Point2]:
    """An exact point in both closed triangles, or None if they are
    disjoint."""
    return feasible_point(
        triangle_constraints(lines_a) + triangle_constraints(lines_b)
    )


def _not_convex_position(lines: Sequence[Line2]) -> bool:
    try:
        find_witness_cell(lines)
    except NotConvexPosition:
        return True
    return False


@dataclass(frozen=True)
class PartitionVerdict:
    first: tuple[int, int, int]
    second: tuple[int, int, int]
    common_point: Optional[Point2]

    @property
    def disjoint(self) -> bool:
        return self.common_point is None


@dataclass(frozen=True)
class Figure1Report:
    partitions: tuple[PartitionVerdict, ...]
    not_convex_position: bool

    @property
    def ok(self) -> bool:
        return (
            len(self.partitions) == 4
            and all(p.disjoint for p in self.partitions)
            and self.not_convex_position
        )


def verify_figure1() -> Figure1Report:
    """Check that all four colorful partitions of the bundled six-line
    counterexample yield exactly disjoint triangle pairs, and that the set
    is not in convex position."""
    lines, coloring = counterexample_six_lines()
    assert validate_general_position(lines).ok
    verdicts = []
    for partition in enumerate_colorful_partitions(coloring):
        first, second = partition.triples
        common = triangles_common_point(
            [lines[i] for i in first], [lines[i] for i in second]
        )
        verdicts.append(PartitionVerdict(first, second, common))
    return Figure1Report(
        partitions=tuple(verdicts),
        not_convex_position=_not_convex_position(lines),
    )


# Octahedron facets as sign patterns over the three axes; facet f covers
# vertex (axis, sign) iff f[axis] == sign. Opposite facets negate.
OCTAHEDRON_FACETS: tuple[tuple[int, int, int], ...] = tuple(
    product((1, -1), repeat=3)
)

OCTAHEDRON_VERTICES: tuple[tuple[int, int], ...] = tuple(
    (axis, sign) for axis in range(3) for sign in (1, -1)
)


def _facet_covers(facet: tuple[int, int, int], vertex: tuple[int, int]) -> bool:
    axis, sign = vertex
    return facet[axis] == sign


@dataclass(frozen=True)
class OctahedronCoverResult:
    t: int
    feasible: bool
    witness: Optional[tuple[int, ...]] = None  # facet indices, multiset

    def witness_multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.witness or ():
            counts[f] = counts.get(f, 0) + 1
        return counts


def octahedron_cover_search(t: int, cap: int = 4) -> OctahedronCoverResult:
    """Exhaustively search for 2t octahedron facets, repeats allowed but no
    opposite pair among the chosen facet types, covering every vertex
    exactly t times."""
    if t < 1:
        raise ValueError("t must be positive")
    if t > cap:
        raise CapExceeded(f"octahedron search cap is t <= {cap}, got {t}")
    for multiset in combinations_with_replacement(range(8), 2 * t):
        support = set(multiset)
        if any((7 - f) in support for f in support):
            continue  # facet index 7-f is the negated pattern of f
        ok = True
        for vertex in OCTAHEDRON_VERTICES:
            hits = sum(
                1 for f in multiset if _facet_covers(OCTAHEDRON_FACETS[f], vertex)
            )
            if hits != t:
                ok = False
                break
        if ok:
            return OctahedronCoverResult(t=t, feasible=True, witness=multiset)
    return OctahedronCoverResult(t=t, feasible=False)


def facets_vertex_adjacent(f: int, g: int) -> bool:
    """Two distinct facets meet in exactly one vertex iff their sign
    patterns agree in exactly one coordinate."""
    a = OCTAHEDRON_FACETS[f]
    b = OCTAHEDRON_FACETS[g]
    return sum(1 for i in range(3) if a[i] == b[i]) == 1


# Label-to-geometry mapping for the non-convex example, read from the
# bundled drawing; kept as data so a corrected mapping can be supplied
# without code changes. Entry i holds the two defining points of line i+1.
NONCONVEX_SEGMENTS: tuple[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]], ...] = (
    ((Fr(5), Fr(-3)), (Fr(-4), Fr(3))),          # l1
    ((Fr(1), Fr(5)), (Fr(-9, 2), Fr(-3))),       # l2
    ((Fr(-5), Fr(5, 2)), (Fr(5), Fr(5, 2))),     # l3
    ((Fr(0), Fr(5)), (Fr(4), Fr(-3))),           # l4
    ((Fr(7, 2), Fr(5)), (Fr(1), Fr(-3))),        # l5
    ((Fr(5), Fr(-1)), (Fr(-5), Fr(-2))),         # l6
)


def nonconvex_six_lines(
    segments: Sequence[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]] = NONCONVEX_SEGMENTS,
) -> tuple[Line2, ...]:
    return tuple(_line(p, q) for p, q in segments)


def enumerate_balanced_colorings(n: int = 6) -> list[Coloring]:
    """All unordered 3-colorings of n elements with classes of size n//3,
    canonicalized so color 1 contains element 0."""
    elements = list(range(n))
    size = n // 3
    colorings = []
    first_rest = [c for c in combinations(elements[1:], size - 1)]
    for rest in first_rest:
        class1 = (0,) + rest
        remaining = [e for e in elements if e not in class1]
        anchor = remaining[0]
        for rest2 in combinations(remaining[1:], size - 1):
            class2 = (anchor,) + rest2
            class3 = tuple(e for e in remaining if e not in class2)
            colorings.append(Coloring.from_classes([class1, class2, class3]))
    return colorings


@dataclass(frozen=True)
class ColoringVerdict:
    coloring: tuple[int, ...]
    partition: Optional[tuple[tuple[int, int, int], tuple[int, int, int]]]
    common_point: Optional[Point2]

    @property
    def ok(self) -> bool:
        return self.partition is not None and self.common_point is not None


@dataclass(frozen=True)
class NonconvexReport:
    verdicts: tuple[ColoringVerdict, ...]
    not_convex_position: bool

    @property
    def ok(self) -> bool:
        return (
            len(self.verdicts) == 15
            and all(v.ok for v in self.verdicts)
            and self.not_convex_position
        )


def verify_nonconvex_example(
    segments: Sequence[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]] = NONCONVEX_SEGMENTS,
) -> NonconvexReport:
    """Check that the bundled non-convex-position six-line set admits, for
    every balanced coloring, a colorful partition whose two triangles
    share an exact common point."""
    lines = nonconvex_six_lines(segments)
    assert validate_general_position(lines).ok
    verdicts = []
    for coloring in enumerate_balanced_colorings(6):
        found_partition = None
        found_point = None
        for partition in enumerate_colorful_partitions(coloring):
            first, second = partition.triples
            common = triangles_common_point(
                [lines[i] for i in first], [lines[i] for i in second]
            )
            if common is not None:
                found_partition = (first, second)
                found_point = common
                break
        verdicts.append(
            ColoringVerdict(
                coloring=coloring.class_of,
                partition=found_partition,
                common_point=found_point,
            )
        )
    return NonconvexReport(
        verdicts=tuple(verdicts),
        not_convex_position=_not_convex_position(lines),
    )
