"""Primal pipeline for colored lines in convex position: validate the
arrangement, find a cell whose boundary meets every line, dualize to
circle points, solve there, and pull the partition back together with an
exact common witness point inside all k triangles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .circle import CircleInstance, CircleSolution, DEFAULT_CAP, solve_circle
from .coloring import Coloring
from .errors import (
    ContractViolation,
    GeneralPositionViolation,
    NotConvexPosition,
    ValidationError,
    WitnessNotFound,
)
from .geom import CirclePoint, Line2

Point2 = tuple[Fraction, Fraction]
# A halfplane constraint: (line, side), meaning side * (a*x + b*y - c) >= 0.
Constraint = tuple[Line2, int]


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    parallel: tuple[tuple[int, int], ...]
    concurrent: tuple[tuple[int, int, int], ...]


def validate_general_position(lines: Sequence[Line2]) -> GeneralPositionReport:
    """No two parallel lines and no three concurrent, decided exactly."""
    n = len(lines)
    parallel = []
    concurrent = []
    meet: dict[tuple[int, int], Point2] = {}
    for i in range(n):
        for j in range(i + 1, n):
            p = lines[i].intersection(lines[j])
            if p is None:
                parallel.append((i, j))
            else:
                meet[(i, j)] = p
    if not parallel:
        for (i, j), p in meet.items():
            for l in range(j + 1, n):
                if l != i and lines[l].eval_at(*p) == 0:
                    concurrent.append((i, j, l))
    return GeneralPositionReport(
        ok=not parallel and not concurrent,
        parallel=tuple(parallel),
        concurrent=tuple(sorted(set(concurrent))),
    )


@dataclass(frozen=True)
class LineInstance:
    """3k colored lines in general position."""

    lines: tuple[Line2, ...]
    coloring: Coloring

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) != len(self.coloring.class_of):
            raise ValidationError(
                f"count mismatch: {len(lines)} lines for "
                f"{len(self.coloring.class_of)} colors"
            )
        report = validate_general_position(lines)
        if not report.ok:
            raise GeneralPositionViolation(
                f"parallel lines: {list(report.parallel)}, "
                f"concurrent triples: {list(report.concurrent)}",
                parallel=report.parallel,
                concurrent=report.concurrent,
            )

    @property
    def k(self) -> int:
        return self.coloring.k


@dataclass(frozen=True)
class CellWitness:
    """A cell of the arrangement, as an exact interior point plus the
    per-line side signs that define it."""

    interior_point: Point2
    sign_vector: tuple[int, ...]


def _signs_at(lines: Sequence[Line2], p: Point2) -> list[int]:
    signs = []
    for line in lines:
        v = line.eval_at(*p)
        signs.append(0 if v == 0 else (1 if v > 0 else -1))
    return signs


def _line_base_point(line: Line2) -> Point2:
    if line.ia != 0:
        return (Fraction(line.ic, line.ia), Fraction(0))
    return (Fraction(0), Fraction(line.ic, line.ib))


def cell_has_edge_on(lines: Sequence[Line2], sv: Sequence[int], j: int) -> bool:
    """Whether the cell with sign vector `sv` has a one-dimensional face
    on line j: some point of line j satisfies every other constraint
    strictly. Decided by exact interval intersection along the line."""
    x0, y0 = _line_base_point(lines[j])
    dx, dy = -lines[j].ib, lines[j].ia  # direction along line j
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for m, line in enumerate(lines):
        if m == j:
            continue
        alpha = sv[m] * (line.ia * dx + line.ib * dy)
        beta = sv[m] * line.eval_at(x0, y0)
        # alpha * t + beta > 0; alpha is nonzero because no two lines are
        # parallel.
        bound = Fraction(-beta, alpha)
        if alpha > 0:
            if lo is None or bound > lo:
                lo = bound
        else:
            if hi is None or bound < hi:
                hi = bound
        if lo is not None and hi is not None and lo >= hi:
            return False
    return True


def _interior_point(
    lines: Sequence[Line2],
    vertex: Point2,
    i: int,
    j: int,
    si: int,
    sj: int,
    sv: Sequence[int],
) -> Point2:
    """Exact point inside the cell seeded at `vertex` displaced into the
    (si, sj) quadrant of lines i and j, moved little enough that no other
    line is crossed."""
    li, lj = lines[i], lines[j]
    det = li.ia * lj.ib - li.ib * lj.ia
    # Solve a_i . w = si, a_j . w = sj for the displacement direction.
    wx = Fraction(si * lj.ib - sj * li.ib, det)
    wy = Fraction(sj * li.ia - si * lj.ia, det)
    eps: Optional[Fraction] = None
    for m, line in enumerate(lines):
        if m in (i, j):
            continue
        alpha = sv[m] * (line.ia * wx + line.ib * wy)
        if alpha >= 0:
            continue
        beta = sv[m] * line.eval_at(*vertex)
        bound = Fraction(beta, -alpha)
        if eps is None or bound < eps:
            eps = bound
    step = Fraction(1) if eps is None else eps / 2
    return (vertex[0] + step * wx, vertex[1] + step * wy)


def find_witness_cell(
    lines: Sequence[Line2], hint: Optional[Point2] = None
) -> CellWitness:
    """A cell of the arrangement whose boundary meets every line.

    Candidate cells are seeded from the four quadrants of every vertex
    (each cell of a simple arrangement of pairwise-crossing lines has a
    vertex on its boundary) and checked line by line for a face. Raises
    NotConvexPosition with the untouched lines of the best candidate."""
    n = len(lines)
    report = validate_general_position(lines)
    if not report.ok:
        raise GeneralPositionViolation(
            "arrangement is not in general position",
            parallel=report.parallel,
            concurrent=report.concurrent,
        )
    if hint is not None:
        sv = _signs_at(lines, hint)
        if 0 in sv:
            raise ValidationError(
                f"hint point lies on line {sv.index(0)}"
            )
        untouched = [j for j in range(n) if not cell_has_edge_on(lines, sv, j)]
        if untouched:
            raise NotConvexPosition(
                f"hinted cell misses lines {untouched}", untouched=untouched
            )
        return CellWitness(interior_point=hint, sign_vector=tuple(sv))

    candidates: dict[tuple[int, ...], tuple[Point2, int, int, int, int]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            vertex = lines[i].intersection(lines[j])
            assert vertex is not None
            base = _signs_at(lines, vertex)
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                sv = list(base)
                sv[i] = si
                sv[j] = sj
                key = tuple(sv)
                if key not in candidates:
                    candidates[key] = (vertex, i, j, si, sj)

    for sv, (vertex, i, j, si, sj) in candidates.items():
        if all(cell_has_edge_on(lines, sv, jj) for jj in range(n)):
            point = _interior_point(lines, vertex, i, j, si, sj, sv)
            if tuple(_signs_at(lines, point)) != sv:
                raise ContractViolation("interior point left its cell")
            return CellWitness(interior_point=point, sign_vector=sv)

    best_untouched: Optional[list[int]] = None
    for sv in candidates:
        untouched = [j for j in range(n) if not cell_has_edge_on(lines, sv, j)]
        if best_untouched is None or len(untouched) < len(best_untouched):
            best_untouched = untouched
    assert best_untouched is not None
    raise NotConvexPosition(
        f"no cell touches every line; best candidate misses {best_untouched}",
        untouched=best_untouched,
    )


def dualize(inst: LineInstance, cell: CellWitness) -> CircleInstance:
    """Map each line to the direction from the cell's interior point to
    its orthogonal projection on the line, keeping colors. Point i of the
    result corresponds to line i."""
    zx, zy = cell.interior_point
    points = []
    for line in inst.lines:
        s = -line.eval_at(zx, zy)  # c - a*zx - b*zy, nonzero off the line
        points.append(CirclePoint(s * line.ia, s * line.ib))
    return CircleInstance(tuple(points), inst.coloring)


def _satisfies_all(constraints: Sequence[Constraint], p: Point2) -> bool:
    return all(side * line.eval_at(*p) >= 0 for line, side in constraints)


def feasible_point(constraints: Sequence[Constraint]) -> Optional[Point2]:
    """An exact point satisfying every closed halfplane constraint, or
    None if the intersection is empty.

    With pairwise non-parallel boundary lines the region contains no full
    line, so if nonempty it has a vertex at two boundary lines; all
    pairwise intersections are tested in index order."""
    n = len(constraints)
    for i in range(n):
        for j in range(i + 1, n):
            p = constraints[i][0].intersection(constraints[j][0])
            if p is not None and _satisfies_all(constraints, p):
                return p
    return None


def triangle_vertices(lines: Sequence[Line2]) -> tuple[Point2, Point2, Point2]:
    """The three pairwise intersection points of three lines."""
    pts = []
    for i in range(3):
        p = lines[i].intersection(lines[(i + 1) % 3])
        if p is None:
            raise GeneralPositionViolation("parallel lines form no triangle")
        pts.append(p)
    return tuple(pts)  # type: ignore[return-value]


def triangle_constraints(lines: Sequence[Line2]) -> list[Constraint]:
    """The bounded cell of three lines as three halfplane constraints,
    read off the sign vector of the vertex centroid."""
    v = triangle_vertices(lines)
    cx = (v[0][0] + v[1][0] + v[2][0]) / 3
    cy = (v[0][1] + v[1][1] + v[2][1]) / 3
    constraints = []
    for line in lines:
        s = line.eval_at(cx, cy)
        if s == 0:
            raise GeneralPositionViolation("triangle centroid lies on a side")
        constraints.append((line, 1 if s > 0 else -1))
    return constraints


@dataclass(frozen=True)
class LineSolution:
    """Result of the full pipeline: the colorful line triples, the chosen
    halfplane side per line (+1 keeps the cell center, -1 is the far
    side), and an exact point common to all k triangles."""

    instance: LineInstance
    cell: CellWitness
    circle: CircleSolution
    triples: tuple[tuple[int, int, int], ...]
    away_lines: tuple[int, ...]
    witness: Point2

    @property
    def trace(self):
        return self.circle.trace


def pull_back(
    circle_solution: CircleSolution, inst: LineInstance, cell: CellWitness
) -> LineSolution:
    """Turn a circle solution for the dual instance back into line triples
    plus a witness point satisfying all 3k halfplane constraints.

    The constraint for a line whose dual point is a middle point keeps the
    far side of the cell center; all others keep the center side. The
    witness is the crossing of the two arc-boundary lines when there are
    two or more middle points, with an exact feasibility fallback."""
    ann = circle_solution.annotated
    middles = set(ann.middles)
    zx, zy = cell.interior_point
    constraints: list[Constraint] = []
    for idx, line in enumerate(inst.lines):
        toward = 1 if line.eval_at(zx, zy) > 0 else -1
        side = -toward if idx in middles else toward
        constraints.append((line, side))

    witness: Optional[Point2] = None
    if ann.gamma_ends is not None:
        la, lb = ann.gamma_ends
        q = inst.lines[la].intersection(inst.lines[lb])
        if q is not None and _satisfies_all(constraints, q):
            witness = q
    if witness is None:
        center = cell.interior_point
        if _satisfies_all(constraints, center):
            witness = center
        else:
            witness = feasible_point(constraints)
    if witness is None:
        raise WitnessNotFound("no point satisfies all halfplane constraints")

    expected = {line: side for line, side in constraints}
    for triple in ann.partition.triples:
        tri_lines = [inst.lines[i] for i in triple]
        for line, side in triangle_constraints(tri_lines):
            if expected[line] != side:
                raise ContractViolation(
                    "triangle side disagrees with the halfplane assignment"
                )

    return LineSolution(
        instance=inst,
        cell=cell,
        circle=circle_solution,
        triples=ann.partition.triples,
        away_lines=tuple(sorted(middles)),
        witness=witness,
    )


def solve_lines(
    inst: LineInstance, cap: int = DEFAULT_CAP, hint: Optional[Point2] = None
) -> LineSolution:
    """Validate, find a witness cell, dualize, solve on the circle, and
    pull back the partition with its witness point."""
    cell = find_witness_cell(inst.lines, hint=hint)
    dual = dualize(inst, cell)
    circle_solution = solve_circle(dual, cap=cap)
    return pull_back(circle_solution, inst, cell)
