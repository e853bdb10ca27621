#include "doctest.h"
#include "kshadow/geometry.h"

#include <algorithm>
#include <vector>

using namespace kshadow;

static Point2 pt(long x, long y) { return Point2{Scalar(x), Scalar(y)}; }
static Point2 pt(long xn, long xd, long yn, long yd) {
    return Point2{Scalar(xn, xd), Scalar(yn, yd)};
}

TEST_CASE("orientation basics") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::Left);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, -1)) == Orientation::Right);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(3, 3)) == Orientation::Collinear);
    CHECK(orientation_sign(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation_sign(pt(0, 0), pt(1, 0), pt(0, -1)) == -1);
    CHECK(orientation_sign(pt(0, 0), pt(2, 2), pt(1, 1)) == 0);
}

TEST_CASE("orientation with tiny rational differences stays exact") {
    // Slope difference of 1e-12 magnitude; doubles would waffle here.
    Point2 a = pt(0, 0);
    Point2 b = pt(1000000, 1, 1000000, 1);
    Point2 c = pt(1000000, 1, 1000000000000L - 1, 1000000);
    CHECK(orientation_sign(a, b, c) == -1);
    Point2 c2 = pt(1000000, 1, 1000000000000L + 1, 1000000);
    CHECK(orientation_sign(a, b, c2) == 1);
}

TEST_CASE("on_segment and strictly_inside_segment") {
    CHECK(on_segment(pt(1, 1), pt(0, 0), pt(2, 2)));
    CHECK(on_segment(pt(0, 0), pt(0, 0), pt(2, 2)));
    CHECK(on_segment(pt(2, 2), pt(0, 0), pt(2, 2)));
    CHECK(!on_segment(pt(3, 3), pt(0, 0), pt(2, 2)));
    CHECK(!on_segment(pt(1, 2), pt(0, 0), pt(2, 2)));
    CHECK(strictly_inside_segment(pt(1, 1), pt(0, 0), pt(2, 2)));
    CHECK(!strictly_inside_segment(pt(0, 0), pt(0, 0), pt(2, 2)));
    CHECK(!strictly_inside_segment(pt(2, 2), pt(0, 0), pt(2, 2)));
    // degenerate segment: only its single point lies on it, never strictly
    CHECK(on_segment(pt(1, 1), pt(1, 1), pt(1, 1)));
    CHECK(!strictly_inside_segment(pt(1, 1), pt(1, 1), pt(1, 1)));
}

TEST_CASE("segments_properly_cross") {
    Segment d1{pt(0, 0), pt(2, 2)};
    Segment d2{pt(0, 2), pt(2, 0)};
    CHECK(segments_properly_cross(d1, d2));
    CHECK(segments_properly_cross(d2, d1));
    // T-touch: endpoint of one in the interior of the other is not proper
    Segment t{pt(1, 1), pt(1, 5)};
    Segment base{pt(0, 1), pt(2, 1)};
    CHECK(!segments_properly_cross(t, base));
    // shared endpoint is not proper
    CHECK(!segments_properly_cross(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(0, 0), pt(0, 1)}));
    // disjoint
    CHECK(!segments_properly_cross(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(0, 5), pt(1, 5)}));
    // collinear overlap is not a proper crossing
    CHECK(!segments_properly_cross(Segment{pt(0, 0), pt(4, 0)}, Segment{pt(2, 0), pt(6, 0)}));
}

TEST_CASE("line_intersection") {
    auto p = line_intersection(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0));
    REQUIRE(p.has_value());
    CHECK(*p == pt(1, 1));
    CHECK(!line_intersection(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)).has_value());
    // intersection outside both segments still found (it is a line predicate)
    auto q = line_intersection(pt(0, 0), pt(1, 0), pt(5, 1), pt(5, 2));
    REQUIRE(q.has_value());
    CHECK(*q == pt(5, 0));
    // rational coordinates
    auto r = line_intersection(pt(0, 0), pt(3, 1), pt(0, 1), pt(3, 0));
    REQUIRE(r.has_value());
    CHECK(*r == pt(3, 2, 1, 2));
}

TEST_CASE("segment_meet enumerates the contact kinds") {
    SegmentMeet cross = segment_meet(Segment{pt(0, 0), pt(2, 2)}, Segment{pt(0, 2), pt(2, 0)});
    CHECK(cross.kind == SegmentMeetKind::Point);
    CHECK(cross.point == pt(1, 1));

    SegmentMeet none = segment_meet(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(0, 5), pt(1, 5)});
    CHECK(none.kind == SegmentMeetKind::None);

    SegmentMeet touch = segment_meet(Segment{pt(1, 1), pt(1, 5)}, Segment{pt(0, 1), pt(2, 1)});
    CHECK(touch.kind == SegmentMeetKind::Point);
    CHECK(touch.point == pt(1, 1));

    SegmentMeet shared = segment_meet(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(0, 0), pt(0, 1)});
    CHECK(shared.kind == SegmentMeetKind::Point);
    CHECK(shared.point == pt(0, 0));

    SegmentMeet ov = segment_meet(Segment{pt(0, 0), pt(4, 0)}, Segment{pt(2, 0), pt(6, 0)});
    CHECK(ov.kind == SegmentMeetKind::Overlap);
    CHECK(ov.ov_a == pt(2, 0));
    CHECK(ov.ov_b == pt(4, 0));

    SegmentMeet endtoend = segment_meet(Segment{pt(0, 0), pt(2, 0)}, Segment{pt(2, 0), pt(5, 0)});
    CHECK(endtoend.kind == SegmentMeetKind::Point);
    CHECK(endtoend.point == pt(2, 0));

    SegmentMeet nested = segment_meet(Segment{pt(0, 0), pt(6, 0)}, Segment{pt(2, 0), pt(3, 0)});
    CHECK(nested.kind == SegmentMeetKind::Overlap);
    CHECK(nested.ov_a == pt(2, 0));
    CHECK(nested.ov_b == pt(3, 0));

    SegmentMeet collinear_apart =
        segment_meet(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(3, 0), pt(5, 0)});
    CHECK(collinear_apart.kind == SegmentMeetKind::None);
}

TEST_CASE("near-miss with large denominators is not a meet") {
    // The supporting lines cross at x = 207762224/12837585 (~16.18), just past
    // the (16,19) end of s1, so the closed segments are disjoint.  Exercises
    // sign normalization: raw bignum comparators may return magnitudes > 1.
    Segment s1{pt(16, 19), pt(14, 12)};
    Segment s2{pt(31066715, 3220338, 52662073, 3220338),
               pt(795756479, 33194155, 782207864, 33194155)};
    CHECK(orientation_sign(s2.a, s2.b, s1.a) == -1);
    CHECK(orientation_sign(s2.a, s2.b, s1.b) == -1);
    CHECK_FALSE(segments_properly_cross(s1, s2));
    CHECK(segment_meet(s1, s2).kind == SegmentMeetKind::None);
    CHECK(segment_meet(s2, s1).kind == SegmentMeetKind::None);
}

TEST_CASE("segment_meet is symmetric") {
    Segment cases[][2] = {
        {Segment{pt(0, 0), pt(2, 2)}, Segment{pt(0, 2), pt(2, 0)}},
        {Segment{pt(0, 0), pt(4, 0)}, Segment{pt(2, 0), pt(6, 0)}},
        {Segment{pt(1, 1), pt(1, 5)}, Segment{pt(0, 1), pt(2, 1)}},
        {Segment{pt(0, 0), pt(1, 0)}, Segment{pt(0, 5), pt(1, 5)}},
    };
    for (auto& c : cases) {
        SegmentMeet m1 = segment_meet(c[0], c[1]);
        SegmentMeet m2 = segment_meet(c[1], c[0]);
        CHECK(m1.kind == m2.kind);
        if (m1.kind == SegmentMeetKind::Point) CHECK(m1.point == m2.point);
        if (m1.kind == SegmentMeetKind::Overlap) {
            CHECK(m1.ov_a == m2.ov_a);
            CHECK(m1.ov_b == m2.ov_b);
        }
    }
}

TEST_CASE("LineKey canonical form") {
    LineKey d = LineKey::through(pt(0, 0), pt(2, 2));
    CHECK(d == LineKey::through(pt(1, 1), pt(3, 3)));
    CHECK(d == LineKey::through(pt(3, 3), pt(-5, -5)));
    CHECK(d.contains(pt(7, 7)));
    CHECK(!d.contains(pt(7, 6)));

    LineKey vertical = LineKey::through(pt(0, 0), pt(0, 5));
    CHECK(vertical.a == 1);
    CHECK(vertical.b == 0);
    CHECK(vertical.c == 0);

    LineKey horizontal = LineKey::through(pt(-3, 2), pt(8, 2));
    CHECK(horizontal.a == 0);
    CHECK(horizontal.b == 1);
    CHECK(horizontal.c == -2);

    // rational endpoints produce integer coefficients with gcd 1
    LineKey slanted = LineKey::through(pt(1, 1, 7, 2), pt(3, 1, 1, 1));
    CHECK(slanted.a == 5);
    CHECK(slanted.b == 4);
    CHECK(slanted.c == -19);
    CHECK(slanted.contains(pt(3, 1)));
    CHECK(slanted.contains(pt(1, 1, 7, 2)));

    CHECK(LineKey::through(pt(0, 0), pt(1, 0)) != LineKey::through(pt(0, 1), pt(1, 1)));
}

TEST_CASE("direction_less orders directions counterclockwise from +x") {
    std::vector<Point2> ring = {pt(1, 0),  pt(2, 1),  pt(1, 1),  pt(1, 2),
                                pt(0, 1),  pt(-1, 2), pt(-1, 1), pt(-2, 1),
                                pt(-1, 0), pt(-2, -1), pt(-1, -1), pt(-1, -2),
                                pt(0, -1), pt(1, -2), pt(1, -1), pt(2, -1)};
    for (size_t i = 0; i < ring.size(); ++i) {
        CHECK(!direction_less(ring[i], ring[i]));
        for (size_t j = i + 1; j < ring.size(); ++j) {
            CHECK(direction_less(ring[i], ring[j]));
            CHECK(!direction_less(ring[j], ring[i]));
        }
    }
    // parallel same-direction vectors compare equal (neither is less)
    CHECK(!direction_less(pt(1, 1), pt(2, 2)));
    CHECK(!direction_less(pt(2, 2), pt(1, 1)));
    // opposite vectors are distinct directions
    CHECK(direction_less(pt(1, 1), pt(-1, -1)));
}

TEST_CASE("bounding boxes") {
    BBox b1 = BBox::of_segment(Segment{pt(0, 4), pt(2, 0)});
    CHECK(b1.xmin == Scalar(0));
    CHECK(b1.ymin == Scalar(0));
    CHECK(b1.xmax == Scalar(2));
    CHECK(b1.ymax == Scalar(4));
    BBox b2 = BBox::of_segment(Segment{pt(2, 1), pt(5, 1)});
    CHECK(b1.overlaps(b2));  // touching counts: boxes are closed
    BBox b3 = BBox::of_segment(Segment{pt(3, 0), pt(5, 4)});
    CHECK(!b1.overlaps(b3));
    CHECK(b1.contains(pt(1, 2)));
    CHECK(b1.contains(pt(2, 4)));
    CHECK(!b1.contains(pt(3, 2)));
    BBox b4 = BBox::of_point(pt(1, 1));
    b4.expand(pt(-1, 3));
    CHECK(b4.xmin == Scalar(-1));
    CHECK(b4.xmax == Scalar(1));
    CHECK(b4.ymax == Scalar(3));
}
