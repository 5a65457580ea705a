"""
Tests for exact geometry: rationals, intervals, boxes and fork frames
"""

from fractions import Fraction

import pytest

from rcc_toolkit.algebra import BaseRelation5, BaseRelation8
from rcc_toolkit.errors import DimensionMismatchError, FrameMismatchError
from rcc_toolkit.geometry import (
    ForkFrame,
    ForkRegion,
    HyperRect,
    IntervalUnion,
    Shape,
    alexandrov_closure,
    alexandrov_interior,
    format_rational,
    parse_rational,
    random_fork_region,
    random_interval_union,
    rel5_of,
    relate,
    to_rational,
)


class TestRationals:

    def test_parse_and_format(self):
        assert parse_rational("-3/6") == Fraction(-1, 2)
        assert format_rational(Fraction(-1, 2)) == "-1/2"
        assert format_rational(4) == "4"
        assert to_rational("7") == 7

    @pytest.mark.parametrize("text", ["1/0", "a/b", "1.5", "", "2/-3"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_floats_rejected(self):
        with pytest.raises(ValueError):
            to_rational(0.5)
        with pytest.raises(ValueError):
            to_rational(True)


class TestIntervals:

    def test_normalization_merges_touching_pieces(self):
        union = IntervalUnion([(2, 3), (0, 1), (1, 2)])
        assert union.intervals == ((0, 3),)
        assert IntervalUnion([(0, 1), (2, 3)]).to_list() == [["0", "1"], ["2", "3"]]

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            IntervalUnion.single(1, 1)
        with pytest.raises(ValueError):
            IntervalUnion([])

    @pytest.mark.parametrize("s, t, expected", [
        ((0, 1), (2, 3), BaseRelation8.DC),
        ((0, 1), (1, 2), BaseRelation8.EC),
        ((0, 2), (1, 3), BaseRelation8.PO),
        ((0, 1), (0, 1), BaseRelation8.EQ),
        ((0, 1), (0, 2), BaseRelation8.TPP),
        ((1, 2), (0, 3), BaseRelation8.NTPP),
        ((0, 3), (2, 3), BaseRelation8.TPPI),
        ((0, 3), (1, 2), BaseRelation8.NTPPI),
    ])
    def test_all_eight_relations(self, s, t, expected):
        assert relate(IntervalUnion.single(*s), IntervalUnion.single(*t)) is expected

    def test_unions(self):
        s = IntervalUnion([(0, 1), (3, 4)])
        t = IntervalUnion.single(1, 3)
        assert relate(s, t) is BaseRelation8.EC
        assert relate(s.union(t), t) is BaseRelation8.NTPPI
        assert relate(s.union(t), IntervalUnion.single(3, 4)) is BaseRelation8.TPPI
        assert rel5_of(s, t) is BaseRelation5.DR

    def test_rational_endpoints(self):
        s = IntervalUnion.single("1/3", "2/3")
        t = IntervalUnion.single(0, 1)
        assert relate(s, t) is BaseRelation8.NTPP
        assert IntervalUnion.from_list(s.to_list()) == s

    def test_random_unions_relate_consistently(self, rng):
        for _ in range(200):
            s, t = random_interval_union(rng), random_interval_union(rng)
            assert relate(s, t).converse() is relate(t, s)


class TestBoxes:

    def test_corner_contact_is_ec(self):
        a = HyperRect([(0, 1), (0, 1)])
        b = HyperRect([(1, 2), (1, 2)])
        assert relate(a, b) is BaseRelation8.EC

    def test_partial_overlap(self):
        a = HyperRect([(0, 2), (0, 2)])
        b = HyperRect([(1, 3), (0, 2)])
        assert relate(a, b) is BaseRelation8.PO
        assert relate(HyperRect([(0, 1), (0, 2)]), a) is BaseRelation8.TPP
        assert relate(HyperRect([(0, 1)] * 3), HyperRect([("-1/2", 2)] * 3)) is BaseRelation8.NTPP

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            relate(HyperRect([(0, 1)]), HyperRect([(0, 1), (0, 1)]))

    def test_singleton_side_rejected(self):
        with pytest.raises(ValueError):
            HyperRect([(0, 1), (2, 2)])

    def test_mixed_region_kinds_rejected(self):
        with pytest.raises(FrameMismatchError):
            relate(HyperRect([(0, 1)]), IntervalUnion.single(0, 1))


class TestForks:

    def test_interior_and_closure(self):
        frame = ForkFrame(1)
        assert alexandrov_interior(frame, {(1, "b"), (1, "l")}) == {(1, "l")}
        assert alexandrov_closure(frame, {(1, "l")}) == {(1, "b"), (1, "l")}
        assert alexandrov_interior(frame, frame.points()) == frame.points()

    def test_points_outside_frame(self):
        with pytest.raises(FrameMismatchError):
            alexandrov_interior(ForkFrame(1), {(2, "b")})
        with pytest.raises(FrameMismatchError):
            ForkRegion({3: "left"}).points(ForkFrame(2))

    def test_shape_relations_on_one_fork(self):
        frame = ForkFrame(1)
        left, right, both = (ForkRegion({1: s}) for s in (Shape.LEFT, Shape.RIGHT, Shape.BOTH))
        assert relate(left, right, frame) is BaseRelation8.EC
        assert relate(left, both, frame) is BaseRelation8.NTPP
        assert relate(both, left, frame) is BaseRelation8.NTPPI
        assert relate(left, left, frame) is BaseRelation8.EQ

    def test_regions_on_separate_forks_are_dc(self):
        assert relate(ForkRegion({1: "both"}), ForkRegion({2: "left"})) is BaseRelation8.DC

    def test_tpp_needs_a_shared_boundary(self):
        s = ForkRegion({1: "left"})
        t = ForkRegion({1: "left", 2: "both"})
        assert relate(s, t) is BaseRelation8.TPP

    def test_dict_form(self):
        region = ForkRegion({2: "right", 1: "empty", 3: "both"})
        assert region.to_dict() == {"2": "right", "3": "both"}
        assert ForkRegion.from_dict(region.to_dict()) == region

    def test_empty_region_rejected(self):
        with pytest.raises(ValueError):
            ForkRegion({1: "empty"})

    def test_random_regions_are_non_empty(self, rng):
        for _ in range(50):
            region = random_fork_region(rng, forks=3)
            assert region.max_fork <= 3
            assert region.points()
