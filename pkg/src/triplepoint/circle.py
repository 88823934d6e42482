"""Constructive solver for colorful partitions of colored circle points
with consecutive middle points.

The pipeline: find a colorful partition minimizing the number of
unbounding triples, regroup its unbounding part from an uncovered cut so
all middle points sit in one block, then repeatedly repartition the nine
points around the middle-point arc until no stray point remains inside it.
The point count of that arc strictly decreases each round, so the loop
terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import product
from typing import Optional, Sequence

from .coloring import Coloring, TriplePartition, enumerate_colorful_partitions, transversal_partition
from .errors import (
    ClaimViolated,
    ContractViolation,
    SearchCapExceeded,
    ValidationError,
)
from .geom import (
    Arc,
    CirclePoint,
    CutPosition,
    arc_contains_closed,
    circular_order,
    classify_triple,
    clockwise_cycle,
    icross,
    in_clockwise_arc,
    sweep_is_short,
)

DEFAULT_CAP = 7


@dataclass(frozen=True)
class CircleInstance:
    """3k colored circle points, pairwise distinct and non-antipodal."""

    points: tuple[CirclePoint, ...]
    coloring: Coloring

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if len(points) != len(self.coloring.class_of):
            raise ValidationError(
                f"count mismatch: {len(points)} points for "
                f"{len(self.coloring.class_of)} colors"
            )
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if icross(points[i], points[j]) == 0:
                    kind = "equal pair" if points[i] == points[j] else "antipodal pair"
                    raise ValidationError(f"{kind}: points {i} and {j}")

    @property
    def k(self) -> int:
        return self.coloring.k

    def restrict(self, indices: Sequence[int]) -> "CircleInstance":
        return CircleInstance(
            tuple(self.points[i] for i in indices),
            self.coloring.restrict(indices),
        )


@dataclass(frozen=True)
class TripleInfo:
    """One triple of the partition with its classification."""

    indices: tuple[int, int, int]
    bounding: bool
    middle: Optional[int] = None  # point index, set iff unbounding


@dataclass(frozen=True)
class AnnotatedPartition:
    """A colorful partition with verdicts, its middle points, and the
    shortest closed clockwise arc containing the middle points (present
    iff there are at least two and they fit in a semicircle)."""

    partition: TriplePartition
    triples: tuple[TripleInfo, ...]
    middles: tuple[int, ...]
    gamma: Optional[Arc]
    gamma_ends: Optional[tuple[int, int]]  # point indices (start, end)

    @property
    def unbounding_count(self) -> int:
        return sum(1 for t in self.triples if not t.bounding)


def _verdict_for(inst: CircleInstance, triple: tuple[int, int, int]) -> TripleInfo:
    v = classify_triple(*(inst.points[i] for i in triple))
    middle = None if v.bounding else triple[v.middle]
    return TripleInfo(indices=triple, bounding=v.bounding, middle=middle)


def _gamma_of_middles(
    inst: CircleInstance, middles: Sequence[int]
) -> tuple[Optional[Arc], Optional[tuple[int, int]]]:
    if len(middles) < 2:
        return None, None
    dirs = [inst.points[i] for i in middles]
    cyc = clockwise_cycle(dirs)
    wide = [
        pos
        for pos in range(len(cyc))
        if icross(dirs[cyc[pos]], dirs[cyc[(pos + 1) % len(cyc)]]) > 0
    ]
    if not wide:
        return None, None  # middle points do not fit in a semicircle
    if len(wide) > 1:
        raise ContractViolation("two clockwise gaps exceed a half turn")
    pos = wide[0]
    start = middles[cyc[(pos + 1) % len(cyc)]]
    end = middles[cyc[pos]]
    return Arc(inst.points[start], inst.points[end]), (start, end)


def annotate(inst: CircleInstance, partition: TriplePartition) -> AnnotatedPartition:
    """Classify every triple and derive the middle-point arc."""
    infos = tuple(_verdict_for(inst, t) for t in partition.triples)
    middles = tuple(sorted(t.middle for t in infos if t.middle is not None))
    gamma, gamma_ends = _gamma_of_middles(inst, middles)
    return AnnotatedPartition(partition, infos, middles, gamma, gamma_ends)


def is_consecutive(ap: AnnotatedPartition, inst: CircleInstance) -> bool:
    """Acceptance predicate: at most one middle point, or all middle
    points fit in a semicircle and the shortest closed arc containing them
    holds no other instance point."""
    if len(ap.middles) <= 1:
        return True
    if ap.gamma is None:
        return False
    middle_set = set(ap.middles)
    start, end = ap.gamma_ends  # type: ignore[misc]
    for i, p in enumerate(inst.points):
        if i in middle_set or i == start or i == end:
            continue
        if in_clockwise_arc(p, ap.gamma):
            return False
    return True


def gamma_point_count(ap: AnnotatedPartition, inst: CircleInstance) -> int:
    """Number of instance points on the closed middle-point arc."""
    if ap.gamma is None:
        return len(ap.middles)
    start, end = ap.gamma_ends  # type: ignore[misc]
    inside = sum(
        1
        for i, p in enumerate(inst.points)
        if i not in (start, end) and in_clockwise_arc(p, ap.gamma)
    )
    return inside + 2


def min_unbounding_partition(inst: CircleInstance, cap: int = DEFAULT_CAP) -> TriplePartition:
    """Colorful partition with the minimum number of unbounding triples,
    found by exhaustive backtracking with branch-and-bound pruning."""
    k = inst.k
    if k > cap:
        raise SearchCapExceeded(
            f"k={k} exceeds search cap {cap}: (k!)^2 colorful partitions"
        )
    c1, c2, c3 = inst.coloring.classes
    cache: dict[tuple[int, int, int], bool] = {}

    def bounding(i: int, j: int, l: int) -> bool:
        key = (i, j, l)
        got = cache.get(key)
        if got is None:
            got = classify_triple(inst.points[i], inst.points[j], inst.points[l]).bounding
            cache[key] = got
        return got

    best_count = k + 1
    best: Optional[list[tuple[int, int, int]]] = None
    used2 = [False] * k
    used3 = [False] * k
    chosen: list[tuple[int, int, int]] = []

    def search(level: int, count: int) -> None:
        nonlocal best_count, best
        if count >= best_count:
            return
        if level == k:
            best_count = count
            best = list(chosen)
            return
        first = c1[level]
        for j in range(k):
            if used2[j]:
                continue
            used2[j] = True
            for l in range(k):
                if used3[l]:
                    continue
                extra = 0 if bounding(first, c2[j], c3[l]) else 1
                if count + extra < best_count:
                    used3[l] = True
                    chosen.append((first, c2[j], c3[l]))
                    search(level + 1, count + extra)
                    chosen.pop()
                    used3[l] = False
            used2[j] = False

    search(0, 0)
    if best is None:
        raise ContractViolation("backtracking search returned no partition")
    return TriplePartition(tuple(best))


def _colorful_triples(coloring: Coloring):
    c1, c2, c3 = coloring.classes
    return product(c1, c2, c3)


def find_uncovered_cut(sub: CircleInstance) -> CutPosition:
    """A gap of the circular order missed by the radial projection of the
    geometric join of the color classes.

    Requires every colorful triple of `sub` to be unbounding. Each such
    triple projects onto the short arc spanned by its two outer points,
    and the union of those closed arcs is the projection of the join; the
    first uncovered gap in clockwise order is returned.
    """
    pts = sub.points
    n = len(pts)
    cyc = clockwise_cycle(pts)
    pos = {p: i for i, p in enumerate(cyc)}
    covered = [False] * n
    for triple in _colorful_triples(sub.coloring):
        info = _verdict_for(sub, tuple(sorted(triple)))
        if info.bounding:
            raise ContractViolation(
                f"colorful bounding triple {info.indices} found during cut search"
            )
        outer = [i for i in info.indices if i != info.middle]
        u, w = outer
        if not sweep_is_short(pts[u], pts[w]):
            u, w = w, u
        g = pos[u]
        stop = pos[w]
        while g != stop:
            covered[g] = True
            g = (g + 1) % n
    for g in range(n):
        if not covered[g]:
            return CutPosition(after=cyc[g])
    raise ContractViolation("join projection covers every gap")


def partition_all_unbounding(sub: CircleInstance) -> AnnotatedPartition:
    """Partition a colorful-bounding-free instance into all-unbounding
    colorful triples whose middle points are consecutive.

    Orders the points clockwise from an uncovered cut, splits the order
    into three equal blocks, and matches the blocks against the color
    classes. Every resulting triple is unbounding with its middle point in
    the central block."""
    m = sub.k
    cut = find_uncovered_cut(sub)
    order = circular_order(sub.points, cut)
    blocks = (order[0:m], order[m : 2 * m], order[2 * m : 3 * m])
    triples = transversal_partition(range(3 * m), blocks, sub.coloring.classes)
    ann = annotate(sub, TriplePartition(tuple(triples)))
    mid_block = set(blocks[1])
    if any(t.bounding for t in ann.triples):
        raise ContractViolation("bounding triple emerged from block matching")
    if set(ann.middles) != mid_block:
        raise ContractViolation("middle points are not exactly the central block")
    if not is_consecutive(ann, sub):
        raise ContractViolation("block partition has non-consecutive middle points")
    return ann


def repartition_nine(
    inst: CircleInstance,
    bounding_triple: tuple[int, int, int],
    unbounding_a: tuple[int, int, int],
    unbounding_b: tuple[int, int, int],
    gamma: Arc,
) -> tuple[TripleInfo, TripleInfo, TripleInfo]:
    """Repartition the nine points of one bounding and two unbounding
    triples into a new bounding triple and two unbounding triples whose
    middle points lie on `gamma` and include every point the old bounding
    triple had there.

    Searches the at most 36 colorful partitions of the nine points and
    returns the first admissible one.
    """
    q_indices = sorted(bounding_triple + unbounding_a + unbounding_b)
    sub_coloring = inst.coloring.restrict(q_indices)
    must_cover = {
        i for i in bounding_triple if arc_contains_closed(inst.points[i], gamma)
    }
    for candidate in enumerate_colorful_partitions(sub_coloring):
        infos = []
        for t in candidate.triples:
            mapped = tuple(q_indices[i] for i in t)
            infos.append(_verdict_for(inst, mapped))
        if sum(1 for info in infos if info.bounding) != 1:
            continue
        middles = {info.middle for info in infos if info.middle is not None}
        if not all(arc_contains_closed(inst.points[i], gamma) for i in middles):
            continue
        if not must_cover <= middles:
            continue
        return tuple(infos)  # type: ignore[return-value]
    raise ClaimViolated(
        f"no admissible repartition of points {q_indices} "
        f"(colors {[inst.coloring.class_of[i] for i in q_indices]})"
    )


@dataclass(frozen=True)
class GammaTraceStep:
    """One shrinking iteration: arc point counts before and after, and the
    positions (in the current partition) of the three replaced triples."""

    iteration: int
    count_before: int
    count_after: int
    touched: tuple[int, int, int]


@dataclass(frozen=True)
class CircleSolution:
    instance: CircleInstance
    annotated: AnnotatedPartition
    trace: tuple[GammaTraceStep, ...]
    min_unbounding: int

    @property
    def partition(self) -> TriplePartition:
        return self.annotated.partition


def _check_invariants(
    inst: CircleInstance, ap: AnnotatedPartition, min_unbounding: int
) -> None:
    # The three running conditions of the shrinking loop.
    if ap.unbounding_count != min_unbounding:
        raise ContractViolation(
            f"unbounding count {ap.unbounding_count} != minimum {min_unbounding}"
        )
    if len(ap.middles) >= 2 and ap.gamma is None:
        raise ContractViolation("middle points left their semicircle")
    if ap.gamma is not None:
        middle_set = set(ap.middles)
        bounding_points = {
            i for t in ap.triples if t.bounding for i in t.indices
        }
        start, end = ap.gamma_ends  # type: ignore[misc]
        for i, p in enumerate(inst.points):
            if i in (start, end) or i in middle_set:
                continue
            if in_clockwise_arc(p, ap.gamma) and i not in bounding_points:
                raise ContractViolation(
                    f"point {i} inside the middle arc is neither a middle point "
                    "nor from a bounding triple"
                )


def _first_stray_point(inst: CircleInstance, ap: AnnotatedPartition) -> int:
    """First non-middle point on the closed arc, scanning clockwise from
    its start."""
    gamma = ap.gamma
    assert gamma is not None and ap.gamma_ends is not None
    start, end = ap.gamma_ends
    middle_set = set(ap.middles)
    interior = [
        i
        for i, p in enumerate(inst.points)
        if i not in (start, end) and in_clockwise_arc(p, gamma)
    ]

    def cmp(i: int, j: int) -> int:
        # All interior points sit within a half turn, so one sign decides.
        c = icross(inst.points[i], inst.points[j])
        if c == 0:
            raise ContractViolation("duplicate direction inside the arc")
        return -1 if c < 0 else 1

    interior.sort(key=cmp_to_key(cmp))
    for i in interior:
        if i not in middle_set:
            return i
    raise ContractViolation("no stray point despite non-consecutive verdict")


def solve_circle(inst: CircleInstance, cap: int = DEFAULT_CAP) -> CircleSolution:
    """Produce a colorful partition whose middle points are consecutive.

    Steps: (1) minimize the number of unbounding triples exactly; (2) if
    two or more remain, regroup their union from an uncovered cut so the
    middle points form one block; (3) while some non-middle point sits on
    the middle arc, repartition the nine points of its bounding triple and
    the two arc-boundary triples, which strictly shrinks the arc.
    """
    k = inst.k
    part = min_unbounding_partition(inst, cap=cap)
    ann = annotate(inst, part)
    min_unb = ann.unbounding_count
    trace: list[GammaTraceStep] = []
    if min_unb >= 2:
        unb_indices = sorted(
            i for t in ann.triples if not t.bounding for i in t.indices
        )
        sub = inst.restrict(unb_indices)
        sub_ann = partition_all_unbounding(sub)
        mapped = [
            tuple(unb_indices[i] for i in t) for t in sub_ann.partition.triples
        ]
        bounding_triples = [t.indices for t in ann.triples if t.bounding]
        ann = annotate(inst, TriplePartition(tuple(bounding_triples) + tuple(mapped)))
    _check_invariants(inst, ann, min_unb)

    iteration = 0
    while not is_consecutive(ann, inst):
        iteration += 1
        if iteration > 3 * k:
            raise ContractViolation("shrinking loop exceeded 3k iterations")
        assert ann.gamma is not None and ann.gamma_ends is not None
        before = gamma_point_count(ann, inst)
        stray = _first_stray_point(inst, ann)
        by_point = {i: t for t in ann.triples for i in t.indices}
        b_info = by_point[stray]
        if not b_info.bounding:
            raise ContractViolation(f"stray point {stray} is not from a bounding triple")
        start, end = ann.gamma_ends
        u1 = by_point[start]
        u2 = by_point[end]
        touched = tuple(
            sorted(ann.partition.triples.index(t.indices) for t in (b_info, u1, u2))
        )
        replaced = {b_info.indices, u1.indices, u2.indices}
        new_infos = repartition_nine(
            inst, b_info.indices, u1.indices, u2.indices, ann.gamma
        )
        kept = [t for t in ann.partition.triples if t not in replaced]
        ann = annotate(
            inst,
            TriplePartition(tuple(kept) + tuple(info.indices for info in new_infos)),
        )
        after = gamma_point_count(ann, inst)
        if after >= before:
            raise ContractViolation(
                f"arc point count failed to decrease: {before} -> {after}"
            )
        _check_invariants(inst, ann, min_unb)
        trace.append(
            GammaTraceStep(
                iteration=iteration,
                count_before=before,
                count_after=after,
                touched=touched,  # type: ignore[arg-type]
            )
        )
    return CircleSolution(
        instance=inst, annotated=ann, trace=tuple(trace), min_unbounding=min_unb
    )
