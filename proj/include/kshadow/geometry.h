#pragma once

#include "kshadow/scalar.h"

#include <optional>
#include <utility>
#include <vector>

namespace kshadow {

struct Point2 {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    /// Lexicographic (x, then y). Along a fixed line this is a linear order.
    friend bool operator<(const Point2& a, const Point2& b) {
        int c = compare(a.x, b.x);
        if (c != 0) return c < 0;
        return compare(a.y, b.y) < 0;
    }
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Scalar& s, const Point2& p) { return {s * p.x, s * p.y}; }

struct Segment {
    Point2 a;
    Point2 b;
};

enum class Orientation { Left, Right, Collinear };

/// Sign of the exact cross product (b-a) x (c-a).
Orientation orientation(const Point2& a, const Point2& b, const Point2& c);
int orientation_sign(const Point2& a, const Point2& b, const Point2& c);

Scalar cross(const Point2& o, const Point2& a, const Point2& b);
Scalar dot(const Point2& a, const Point2& b);

/// p lies on the closed segment ab.
bool on_segment(const Point2& p, const Point2& a, const Point2& b);
/// p lies strictly between a and b on the open segment.
bool strictly_inside_segment(const Point2& p, const Point2& a, const Point2& b);

/// Interiors cross in exactly one point, endpoints strictly on opposite
/// sides for both segments.
bool segments_properly_cross(const Segment& s1, const Segment& s2);

/// Exact intersection of the supporting lines; nullopt when parallel.
std::optional<Point2> line_intersection(const Point2& a1, const Point2& b1,
                                        const Point2& a2, const Point2& b2);

enum class SegmentMeetKind { None, Point, Overlap };

struct SegmentMeet {
    SegmentMeetKind kind = SegmentMeetKind::None;
    Point2 point;      // kind == Point
    Point2 ov_a, ov_b; // kind == Overlap: the shared closed sub-segment
};

/// How two closed segments meet: disjoint, a single point (crossing or
/// touch), or a collinear overlap of positive length.
SegmentMeet segment_meet(const Segment& s1, const Segment& s2);

/// Canonical supporting line of a segment: integers (A, B, C) with
/// Ax + By + C = 0, gcd 1, leading nonzero of (A, B) positive.
struct LineKey {
    mpz_class a, b, c;

    static LineKey through(const Point2& p, const Point2& q);
    bool contains(const Point2& p) const;

    friend bool operator==(const LineKey& l, const LineKey& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const LineKey& l, const LineKey& r) {
        if (int s = cmp(l.a, r.a); s != 0) return s < 0;
        if (int s = cmp(l.b, r.b); s != 0) return s < 0;
        return cmp(l.c, r.c) < 0;
    }
};

/// CCW order of direction vectors starting from (1, 0). Exact; zero vectors
/// must not be passed. Returns true when u comes strictly before v.
bool direction_less(const Point2& u, const Point2& v);

/// Axis-aligned bounding box helper used by intersection prefilters.
struct BBox {
    Scalar xmin, ymin, xmax, ymax;

    static BBox of_point(const Point2& p);
    static BBox of_segment(const Segment& s);
    bool overlaps(const BBox& o) const;
    bool contains(const Point2& p) const;
    void expand(const Point2& p);
};

}  // namespace kshadow
