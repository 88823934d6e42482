import math
import random
from fractions import Fraction
from itertools import product

import pytest

from triplepoint.circle import (
    CircleInstance,
    annotate,
    find_uncovered_cut,
    gamma_point_count,
    is_consecutive,
    min_unbounding_partition,
    partition_all_unbounding,
    repartition_nine,
    solve_circle,
)
from triplepoint.coloring import Coloring, TriplePartition, enumerate_colorful_partitions
from triplepoint.errors import ContractViolation, SearchCapExceeded, ValidationError
from triplepoint.geom import Arc, CirclePoint, classify_triple

from geomtest_util import (
    arc_directions,
    fangle,
    random_circle_instance,
    semicircle_instance,
)


def cp(x, y):
    return CirclePoint(Fraction(x), Fraction(y))


def make_instance(points, colors):
    return CircleInstance(tuple(cp(*p) for p in points), Coloring(tuple(colors)))


# Six points whose join projection leaves exactly one gap; derived from a
# drawn example, with the circular order and colors preserved as exact
# rationals. Colors: green {0, 5}, blue {1, 3}, red {2, 4}.
JOIN_GAP_POINTS = [(-19, -7), (-32, 25), (-10, 39), (16, 37), (36, 19), (7, -4)]
JOIN_GAP_COLORS = (3, 2, 1, 2, 1, 3)


class TestCircleInstance:
    def test_antipodal_pair_rejected(self):
        with pytest.raises(ValidationError, match="antipodal pair"):
            make_instance([(1, 0), (-2, 0), (0, 1)], [1, 2, 3])

    def test_count_mismatch_rejected(self):
        with pytest.raises(ValidationError, match="count mismatch"):
            CircleInstance((cp(1, 0), cp(0, 1)), Coloring((1, 2, 3)))


class TestIsConsecutive:
    def test_no_middle_points(self):
        inst = make_instance(
            [(1, 0), (-1, 1), (-1, -1), (2, 1), (-3, 2), (-1, -4)],
            [1, 2, 3, 1, 2, 3],
        )
        ann = annotate(inst, TriplePartition(((0, 1, 2), (3, 4, 5))))
        assert ann.middles == ()
        assert is_consecutive(ann, inst)

    def test_adjacent_middles(self):
        inst = make_instance(
            [(6, 1), (0, 1), (-6, 1), (1, 12), (-1, 6), (-12, 1)],
            [1, 2, 3, 1, 2, 3],
        )
        ann = annotate(inst, TriplePartition(((0, 1, 2), (3, 4, 5))))
        assert set(ann.middles) == {1, 4}
        assert is_consecutive(ann, inst)

    def test_separated_middles(self):
        # Same shape, but point 3 moved inside the short arc between the
        # two middle points.
        inst = make_instance(
            [(6, 1), (0, 1), (-6, 1), (-1, 12), (-1, 6), (-12, 1)],
            [1, 2, 3, 1, 2, 3],
        )
        ann = annotate(inst, TriplePartition(((0, 1, 2), (3, 4, 5))))
        assert set(ann.middles) == {1, 4}
        assert not is_consecutive(ann, inst)

    def test_single_middle_point(self):
        inst = make_instance([(1, 0), (0, 1), (1, 1)], [1, 2, 3])
        ann = annotate(inst, TriplePartition(((0, 1, 2),)))
        assert len(ann.middles) == 1
        assert ann.gamma is None
        assert is_consecutive(ann, inst)


class TestMinUnbounding:
    def test_semicircle_forces_all_unbounding(self):
        rng = random.Random(5)
        for k in (1, 2, 3):
            inst = semicircle_instance(rng, k)
            part = min_unbounding_partition(inst)
            ann = annotate(inst, part)
            assert ann.unbounding_count == k

    def test_single_bounding_triple(self):
        inst = make_instance([(1, 0), (-1, 1), (-1, -1)], [1, 2, 3])
        part = min_unbounding_partition(inst)
        assert annotate(inst, part).unbounding_count == 0

    def test_matches_enumeration_oracle(self):
        rng = random.Random(17)
        for _ in range(20):
            inst = random_circle_instance(rng, 3)
            part = min_unbounding_partition(inst)
            got = annotate(inst, part).unbounding_count
            best = min(
                annotate(inst, p).unbounding_count
                for p in enumerate_colorful_partitions(inst.coloring)
            )
            assert got == best

    def test_cap(self):
        rng = random.Random(1)
        inst = random_circle_instance(rng, 3)
        with pytest.raises(SearchCapExceeded):
            min_unbounding_partition(inst, cap=2)


class TestFindUncoveredCut:
    def test_single_triple_quarter_span(self):
        inst = make_instance([(1, 0), (1, 1), (0, 1)], [1, 2, 3])
        cut = find_uncovered_cut(inst)
        # The only uncovered gap is the three-quarter arc clockwise after
        # (1, 0).
        assert cut.after == 0

    def test_join_gap_example(self):
        inst = make_instance(JOIN_GAP_POINTS, JOIN_GAP_COLORS)
        assert find_uncovered_cut(inst).after == 5

    def test_bounding_triple_rejected(self):
        inst = make_instance([(1, 0), (-1, 1), (-1, -1)], [1, 2, 3])
        with pytest.raises(ContractViolation):
            find_uncovered_cut(inst)

    def test_gap_misses_every_spanning_arc(self):
        rng = random.Random(23)
        for _ in range(30):
            pts = arc_directions(rng, 9, 0.0, 175.0)
            colors = [1, 2, 3] * 3
            rng.shuffle(colors)
            inst = CircleInstance(tuple(pts), Coloring(tuple(colors)))
            cut = find_uncovered_cut(inst)
            # Float check that the gap bisector avoids every colorful
            # triple's spanning arc.
            order = sorted(range(9), key=lambda i: -fangle(inst.points[i]))
            pos = order.index(cut.after)
            succ = order[(pos + 1) % 9]
            a0 = fangle(inst.points[cut.after])
            gap = (a0 - fangle(inst.points[succ])) % (2 * math.pi)
            mid_angle = a0 - gap / 2
            c1, c2, c3 = inst.coloring.classes
            for triple in product(c1, c2, c3):
                v = classify_triple(*(inst.points[i] for i in triple))
                outer = [i for i in triple if i != triple[v.middle]]
                b0 = fangle(inst.points[outer[0]])
                b1 = fangle(inst.points[outer[1]])
                sweep = (b0 - b1) % (2 * math.pi)
                if sweep > math.pi:
                    b0, sweep = b1, 2 * math.pi - sweep
                assert not (0 < (b0 - mid_angle) % (2 * math.pi) < sweep)


class TestPartitionAllUnbounding:
    def test_single_triple(self):
        inst = make_instance([(1, 0), (1, 1), (0, 1)], [1, 2, 3])
        ann = partition_all_unbounding(inst)
        assert ann.partition.triples == ((0, 1, 2),)
        # The middle point is the central element of the clockwise order.
        assert ann.middles == (1,)

    def test_join_gap_example_partition(self):
        inst = make_instance(JOIN_GAP_POINTS, JOIN_GAP_COLORS)
        ann = partition_all_unbounding(inst)
        assert ann.partition.triples == ((0, 3, 4), (1, 2, 5))
        assert set(ann.middles) == {2, 3}
        assert is_consecutive(ann, inst)

    def test_random_semicircle_instances(self):
        rng = random.Random(29)
        for _ in range(25):
            inst = semicircle_instance(rng, 2)
            ann = partition_all_unbounding(inst)
            assert ann.unbounding_count == 2
            assert is_consecutive(ann, inst)


# Nine-point repartition fixtures derived from drawn examples, preserving
# the circular order and coloring as exact rationals. Indices: b1=0 b2=1
# b3=2 m1=3 m2=4 l1=5 l2=6 r1=7 r2=8; the arc runs clockwise m1 -> m2.
TWO_ON_ARC = dict(
    points=[(-50, 193), (50, 193), (0, -1), (-11, 17), (11, 17), (-9, 4), (-1, 0), (39, -10), (19, 7)],
    colors=(1, 2, 3, 3, 1, 1, 2, 2, 3),
)
ONE_ON_ARC = dict(
    points=[(0, 1), (50, -193), (-17, -11), (-11, 17), (11, 17), (-9, 4), (-1, 0), (39, -10), (19, 7)],
    colors=(1, 2, 3, 2, 2, 1, 3, 3, 1),
)


def _nine_point_setup(cfg):
    inst = make_instance(cfg["points"], cfg["colors"])
    gamma = Arc(inst.points[3], inst.points[4])
    return inst, gamma


class TestRepartitionNine:
    def test_two_arc_points_become_middles(self):
        inst, gamma = _nine_point_setup(TWO_ON_ARC)
        infos = repartition_nine(inst, (0, 1, 2), (3, 5, 7), (4, 6, 8), gamma)
        assert sum(1 for i in infos if i.bounding) == 1
        middles = sorted(i.middle for i in infos if i.middle is not None)
        assert middles == [0, 1]

    def test_two_arc_points_bounding_shape(self):
        # The new bounding triple pairs the off-arc point with one point
        # from each side of the arc.
        inst, gamma = _nine_point_setup(TWO_ON_ARC)
        infos = repartition_nine(inst, (0, 1, 2), (3, 5, 7), (4, 6, 8), gamma)
        b_new = next(i.indices for i in infos if i.bounding)
        assert 2 in b_new
        assert len(set(b_new) & {3, 5, 6}) == 1
        assert len(set(b_new) & {4, 7, 8}) == 1

    def test_one_arc_point_joined_by_boundary_middle(self):
        inst, gamma = _nine_point_setup(ONE_ON_ARC)
        infos = repartition_nine(inst, (0, 1, 2), (3, 5, 7), (4, 6, 8), gamma)
        middles = sorted(i.middle for i in infos if i.middle is not None)
        assert middles == [0, 3]

    def test_one_arc_point_bounding_shape(self):
        # One point from the left of the arc with two from the right.
        inst, gamma = _nine_point_setup(ONE_ON_ARC)
        infos = repartition_nine(inst, (0, 1, 2), (3, 5, 7), (4, 6, 8), gamma)
        b_new = next(i.indices for i in infos if i.bounding)
        assert len(set(b_new) & {5, 6, 2}) == 1
        assert len(set(b_new) & {4, 7, 8, 1}) == 2

    def test_postconditions_on_both_fixtures(self):
        for cfg in (TWO_ON_ARC, ONE_ON_ARC):
            inst, gamma = _nine_point_setup(cfg)
            infos = repartition_nine(inst, (0, 1, 2), (3, 5, 7), (4, 6, 8), gamma)
            assert sorted(i for info in infos for i in info.indices) == list(range(9))
            assert sum(1 for i in infos if i.bounding) == 1
            for info in infos:
                colors = sorted(inst.coloring.class_of[i] for i in info.indices)
                assert colors == [1, 2, 3]
            middles = [i.middle for i in infos if i.middle is not None]
            assert len(middles) == 2
            from triplepoint.geom import arc_contains_closed

            assert all(arc_contains_closed(inst.points[m], gamma) for m in middles)


class TestSolveCircle:
    def test_k1(self):
        inst = make_instance([(1, 0), (0, 1), (1, 1)], [1, 2, 3])
        solution = solve_circle(inst)
        assert solution.partition.triples == ((0, 1, 2),)
        assert is_consecutive(solution.annotated, inst)

    def test_cap(self):
        rng = random.Random(2)
        inst = random_circle_instance(rng, 4)
        with pytest.raises(SearchCapExceeded):
            solve_circle(inst, cap=3)

    def test_random_instances_all_invariants(self):
        rng = random.Random(31)
        for trial in range(40):
            k = rng.choice((2, 3, 4))
            inst = random_circle_instance(rng, k)
            solution = solve_circle(inst)
            ann = solution.annotated
            assert ann.partition.is_colorful(inst.coloring)
            assert sorted(i for t in ann.partition.triples for i in t) == list(
                range(3 * k)
            )
            assert is_consecutive(ann, inst)
            assert ann.unbounding_count == solution.min_unbounding
            assert len(solution.trace) <= 3 * k
            for step in solution.trace:
                assert step.count_after < step.count_before

    def test_shrinking_instances_produce_trace(self):
        # Bounding-rich instances around a cluster of unbounding triples
        # force at least one repartition on some seeds.
        rng = random.Random(37)
        traced = 0
        for _ in range(40):
            inst = random_circle_instance(rng, 4)
            solution = solve_circle(inst)
            traced += len(solution.trace)
        assert traced > 0

    def test_gamma_count_consistency(self):
        rng = random.Random(41)
        for _ in range(20):
            inst = random_circle_instance(rng, 3)
            solution = solve_circle(inst)
            ann = solution.annotated
            if ann.gamma is not None:
                # Consecutive output: the closed arc holds exactly the
                # middle points.
                assert gamma_point_count(ann, inst) == len(ann.middles)
