#include "kshadow/geometry.h"

namespace kshadow {

int orientation_sign(const Point2& a, const Point2& b, const Point2& c) {
    mpq_class lhs = (b.x.raw() - a.x.raw()) * (c.y.raw() - a.y.raw());
    mpq_class rhs = (b.y.raw() - a.y.raw()) * (c.x.raw() - a.x.raw());
    // mpq_cmp only pins down the sign; callers compare these values, so normalize.
    int c0 = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
    return (c0 > 0) - (c0 < 0);
}

Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
    int s = orientation_sign(a, b, c);
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

Scalar cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Scalar dot(const Point2& a, const Point2& b) {
    return a.x * b.x + a.y * b.y;
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (orientation_sign(a, b, p) != 0) return false;
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
           min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool strictly_inside_segment(const Point2& p, const Point2& a, const Point2& b) {
    return on_segment(p, a, b) && p != a && p != b;
}

bool segments_properly_cross(const Segment& s1, const Segment& s2) {
    int d1 = orientation_sign(s2.a, s2.b, s1.a);
    int d2 = orientation_sign(s2.a, s2.b, s1.b);
    if (d1 == 0 || d2 == 0 || d1 == d2) return false;
    int d3 = orientation_sign(s1.a, s1.b, s2.a);
    int d4 = orientation_sign(s1.a, s1.b, s2.b);
    return d3 != 0 && d4 != 0 && d3 != d4;
}

std::optional<Point2> line_intersection(const Point2& a1, const Point2& b1,
                                        const Point2& a2, const Point2& b2) {
    Point2 d1 = b1 - a1;
    Point2 d2 = b2 - a2;
    Scalar den = d1.x * d2.y - d1.y * d2.x;
    if (den.sign() == 0) return std::nullopt;
    Point2 w = a2 - a1;
    Scalar t = (w.x * d2.y - w.y * d2.x) / den;
    return Point2{a1.x + t * d1.x, a1.y + t * d1.y};
}

SegmentMeet segment_meet(const Segment& s1, const Segment& s2) {
    SegmentMeet out;
    if (!BBox::of_segment(s1).overlaps(BBox::of_segment(s2))) return out;

    int d1 = orientation_sign(s2.a, s2.b, s1.a);
    int d2 = orientation_sign(s2.a, s2.b, s1.b);
    int d3 = orientation_sign(s1.a, s1.b, s2.a);
    int d4 = orientation_sign(s1.a, s1.b, s2.b);

    if (d1 == 0 && d2 == 0) {
        // collinear: order the four endpoints along the line
        Point2 lo1 = s1.a < s1.b ? s1.a : s1.b;
        Point2 hi1 = s1.a < s1.b ? s1.b : s1.a;
        Point2 lo2 = s2.a < s2.b ? s2.a : s2.b;
        Point2 hi2 = s2.a < s2.b ? s2.b : s2.a;
        Point2 lo = lo1 < lo2 ? lo2 : lo1;  // max of the lows
        Point2 hi = hi1 < hi2 ? hi1 : hi2;  // min of the highs
        if (hi < lo) return out;
        if (lo == hi) {
            out.kind = SegmentMeetKind::Point;
            out.point = lo;
            return out;
        }
        out.kind = SegmentMeetKind::Overlap;
        out.ov_a = lo;
        out.ov_b = hi;
        return out;
    }

    auto endpoint_touch = [&]() -> std::optional<Point2> {
        if (d1 == 0 && on_segment(s1.a, s2.a, s2.b)) return s1.a;
        if (d2 == 0 && on_segment(s1.b, s2.a, s2.b)) return s1.b;
        if (d3 == 0 && on_segment(s2.a, s1.a, s1.b)) return s2.a;
        if (d4 == 0 && on_segment(s2.b, s1.a, s1.b)) return s2.b;
        return std::nullopt;
    };

    if (d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) {
        auto p = line_intersection(s1.a, s1.b, s2.a, s2.b);
        out.kind = SegmentMeetKind::Point;
        out.point = *p;
        return out;
    }
    if (auto p = endpoint_touch()) {
        out.kind = SegmentMeetKind::Point;
        out.point = *p;
        return out;
    }
    return out;
}

LineKey LineKey::through(const Point2& p, const Point2& q) {
    // A = y1 - y2, B = x2 - x1, C = -(A x1 + B y1), cleared to integers.
    mpq_class A = p.y.raw() - q.y.raw();
    mpq_class B = q.x.raw() - p.x.raw();
    mpq_class C = -(A * p.x.raw() + B * p.y.raw());
    mpz_class lcm_den = 1;
    for (const mpq_class* v : {&A, &B, &C}) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), v->get_den().get_mpz_t());
        lcm_den = l;
    }
    mpz_class ai = mpz_class(A.get_num() * (lcm_den / A.get_den()));
    mpz_class bi = mpz_class(B.get_num() * (lcm_den / B.get_den()));
    mpz_class ci = mpz_class(C.get_num() * (lcm_den / C.get_den()));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ai.get_mpz_t(), bi.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
    if (g != 0) {
        ai /= g;
        bi /= g;
        ci /= g;
    }
    int lead = sgn(ai) != 0 ? sgn(ai) : sgn(bi);
    if (lead < 0) {
        ai = -ai;
        bi = -bi;
        ci = -ci;
    }
    return LineKey{ai, bi, ci};
}

bool LineKey::contains(const Point2& p) const {
    mpq_class v = mpq_class(a) * p.x.raw() + mpq_class(b) * p.y.raw() + mpq_class(c);
    return sgn(v) == 0;
}

namespace {

// 0: direction (1,0); 1: upper half plane; 2: (-1,0); 3: lower half plane
int angular_class(const Point2& d) {
    int sy = d.y.sign();
    if (sy > 0) return 1;
    if (sy < 0) return 3;
    return d.x.sign() > 0 ? 0 : 2;
}

}  // namespace

bool direction_less(const Point2& u, const Point2& v) {
    int cu = angular_class(u);
    int cv = angular_class(v);
    if (cu != cv) return cu < cv;
    // same open half plane (or same axis direction): CCW order by cross sign
    Scalar cr = u.x * v.y - u.y * v.x;
    return cr.sign() > 0;
}

BBox BBox::of_point(const Point2& p) {
    return BBox{p.x, p.y, p.x, p.y};
}

BBox BBox::of_segment(const Segment& s) {
    return BBox{min(s.a.x, s.b.x), min(s.a.y, s.b.y), max(s.a.x, s.b.x), max(s.a.y, s.b.y)};
}

bool BBox::overlaps(const BBox& o) const {
    return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
}

bool BBox::contains(const Point2& p) const {
    return !(p.x < xmin || xmax < p.x || p.y < ymin || ymax < p.y);
}

void BBox::expand(const Point2& p) {
    if (p.x < xmin) xmin = p.x;
    if (p.y < ymin) ymin = p.y;
    if (xmax < p.x) xmax = p.x;
    if (ymax < p.y) ymax = p.y;
}

}  // namespace kshadow
