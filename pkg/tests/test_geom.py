import random
from fractions import Fraction

import pytest
from hypothesis import given, assume
from hypothesis import strategies as st

from triplepoint.errors import DegenerateQuery, DegenerateTriple
from triplepoint.geom import (
    Arc,
    CirclePoint,
    CutPosition,
    Line2,
    circular_order,
    classify_triple,
    cross,
    icross,
    in_clockwise_arc,
)

from geomtest_util import (
    clockwise_order_oracle,
    distinct_directions,
    in_clockwise_arc_oracle,
)


def cp(x, y):
    return CirclePoint(Fraction(x), Fraction(y))


directions = st.tuples(
    st.integers(-50, 50), st.integers(-50, 50)
).filter(lambda d: d != (0, 0))


class TestCross:
    def test_unit_basis(self):
        assert cross(cp(1, 0), cp(0, 1)) == 1

    def test_collinear(self):
        assert cross(cp(1, 0), cp(2, 0)) == 0

    def test_positive_scale_invariance(self):
        assert cross(cp(2, 0), cp(0, 3)) == 6

    def test_exact_fractions(self):
        assert cross(cp(Fraction(1, 3), 0), cp(0, Fraction(2, 7))) == Fraction(2, 21)


class TestClassifyTriple:
    def test_bounding(self):
        v = classify_triple(cp(1, 0), cp(-1, 1), cp(-1, -1))
        assert v.bounding and v.middle is None

    def test_unbounding_middle_third(self):
        v = classify_triple(cp(1, 0), cp(0, 1), cp(1, 1))
        assert not v.bounding and v.middle == 2

    def test_unbounding_middle_second(self):
        v = classify_triple(cp(1, 0), cp(0, 1), cp(-1, 1))
        assert not v.bounding and v.middle == 1

    def test_degenerate_equal(self):
        with pytest.raises(DegenerateTriple):
            classify_triple(cp(1, 0), cp(2, 0), cp(0, 1))

    def test_degenerate_antipodal(self):
        with pytest.raises(DegenerateTriple):
            classify_triple(cp(1, 1), cp(-2, -2), cp(0, 1))

    @given(directions, directions, directions)
    def test_permutation_invariance(self, a, b, c):
        pts = [CirclePoint(*d) for d in (a, b, c)]
        assume(all(icross(pts[i], pts[j]) != 0 for i in range(3) for j in range(i + 1, 3)))
        base = classify_triple(*pts)
        for perm in ((1, 2, 0), (2, 1, 0), (0, 2, 1)):
            other = classify_triple(*(pts[i] for i in perm))
            assert other.bounding == base.bounding
            if not base.bounding:
                assert pts[perm[other.middle]] == pts[base.middle]

    @given(directions, directions, directions, st.integers(1, 7), st.integers(1, 7))
    def test_rescale_invariance(self, a, b, c, num, den):
        pts = [CirclePoint(*d) for d in (a, b, c)]
        assume(all(icross(pts[i], pts[j]) != 0 for i in range(3) for j in range(i + 1, 3)))
        base = classify_triple(*pts)
        s = Fraction(num, den)
        scaled = [CirclePoint(p.dx * s, p.dy * s) for p in pts]
        v = classify_triple(*scaled)
        assert v.bounding == base.bounding and v.middle == base.middle

    @given(directions, directions, directions)
    def test_open_semicircle_formulation(self, a, b, c):
        # Unbounding iff some open halfplane through the center holds all
        # three points.
        pts = [CirclePoint(*d) for d in (a, b, c)]
        assume(all(icross(pts[i], pts[j]) != 0 for i in range(3) for j in range(i + 1, 3)))
        in_open_semicircle = False
        for x in pts:
            for s in (1, -1):
                if all(s * icross(x, y) > 0 for y in pts if y != x):
                    in_open_semicircle = True
        assert classify_triple(*pts).bounding == (not in_open_semicircle)

    @given(directions, directions, directions)
    def test_exactly_one_middle_cone_hit(self, a, b, c):
        pts = [CirclePoint(*d) for d in (a, b, c)]
        assume(all(icross(pts[i], pts[j]) != 0 for i in range(3) for j in range(i + 1, 3)))
        v = classify_triple(*pts)
        hits = []
        for i in range(3):
            x = pts[i]
            u = pts[(i + 1) % 3]
            w = pts[(i + 2) % 3]
            d = icross(u, w)
            if icross(x, w) * d > 0 and icross(u, x) * d > 0:
                hits.append(i)
        if v.bounding:
            assert hits == []
        else:
            assert hits == [v.middle]


class TestClockwiseArc:
    def test_quarter_turn_contains_bisector(self):
        arc = Arc(cp(1, 0), cp(0, -1))
        assert in_clockwise_arc(cp(1, -1), arc)

    def test_opposite_side_excluded(self):
        arc = Arc(cp(1, 0), cp(0, -1))
        assert not in_clockwise_arc(cp(-1, 1), arc)

    def test_antipodal_query_rejected(self):
        arc = Arc(cp(1, 0), cp(0, -1))
        with pytest.raises(DegenerateQuery):
            in_clockwise_arc(cp(0, 1), arc)

    def test_antipodal_arc_endpoints_rejected(self):
        with pytest.raises(DegenerateQuery):
            Arc(cp(0, 1), cp(0, -1))

    def test_long_arc_membership(self):
        # Clockwise from (1,1) all the way around to (0,1) passes (-1,0).
        arc = Arc(cp(1, 1), cp(0, 1))
        assert in_clockwise_arc(cp(-1, 0), arc)
        assert in_clockwise_arc(cp(1, -1), arc)
        assert not in_clockwise_arc(cp(1, 2), arc)

    @given(directions, directions, directions)
    def test_arc_and_reverse_partition_circle(self, f, t, x):
        start, end, query = CirclePoint(*f), CirclePoint(*t), CirclePoint(*x)
        assume(icross(start, end) != 0)
        assume(icross(query, start) != 0 and icross(query, end) != 0)
        forward = in_clockwise_arc(query, Arc(start, end))
        backward = in_clockwise_arc(query, Arc(end, start))
        assert forward != backward

    def test_matches_float_oracle(self):
        rng = random.Random(7)
        for _ in range(300):
            pts = distinct_directions(rng, 3)
            arc = Arc(pts[0], pts[1])
            assert in_clockwise_arc(pts[2], arc) == in_clockwise_arc_oracle(
                pts[2], pts[0], pts[1]
            )


class TestCircularOrder:
    def test_four_points_clockwise_from_cut(self):
        pts = [cp(1, 0), cp(0, 1), cp(-1, 1), cp(1, -2)]
        # Clockwise after (1,0) the next point down is (1,-2).
        assert circular_order(pts, CutPosition(after=0)) == [3, 2, 1, 0]

    def test_antipodal_points_rejected(self):
        from triplepoint.errors import DegenerateConfiguration

        pts = [cp(1, 0), cp(0, 1), cp(-1, 0), cp(0, -1)]
        with pytest.raises(DegenerateConfiguration):
            circular_order(pts, CutPosition(after=0))

    def test_all_cuts_are_rotations(self):
        pts = [cp(2, 1), cp(-1, 3), cp(-2, -5)]
        orders = [tuple(circular_order(pts, CutPosition(after=i))) for i in range(3)]
        doubled = orders[0] + orders[0]
        for order in orders:
            assert any(
                doubled[i : i + 3] == order for i in range(3)
            ), f"{order} is not a rotation of {orders[0]}"

    def test_matches_angle_sort_oracle(self):
        rng = random.Random(11)
        for _ in range(50):
            pts = distinct_directions(rng, 12)
            cut = rng.randrange(12)
            assert circular_order(pts, CutPosition(after=cut)) == clockwise_order_oracle(
                pts, cut
            )


class TestCirclePointIdentity:
    def test_positive_multiples_equal(self):
        assert cp(2, 4) == cp(1, 2) == cp(Fraction(1, 3), Fraction(2, 3))

    def test_antipodal_not_equal(self):
        assert cp(1, 2) != cp(-1, -2)
        assert cp(1, 2).is_antipodal_to(cp(-2, -4))

    def test_hash_consistent(self):
        assert len({cp(2, 4), cp(1, 2), cp(5, 10)}) == 1


class TestLine2:
    def test_through_points(self):
        line = Line2.through((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)))
        assert line.eval_at(Fraction(2), Fraction(2)) == 0
        assert line.eval_at(Fraction(0), Fraction(1)) != 0

    def test_intersection(self):
        a = Line2(1, 0, 1)
        b = Line2(0, 1, 2)
        assert a.intersection(b) == (1, 2)

    def test_parallel_intersection_none(self):
        assert Line2(1, 1, 0).intersection(Line2(2, 2, 5)) is None

    def test_positive_scaling_same_line(self):
        assert Line2(1, 2, 3) == Line2(Fraction(1, 2), 1, Fraction(3, 2))
        assert Line2(1, 2, 3) != Line2(-1, -2, -3)
