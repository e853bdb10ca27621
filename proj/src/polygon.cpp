#include "kshadow/polygon.h"

#include <algorithm>
#include <sstream>

namespace kshadow {

Scalar SimplePolygon::signed_area() const {
    mpq_class acc = 0;
    int m = n();
    for (int i = 0; i < m; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % m];
        acc += a.x.raw() * b.y.raw() - b.x.raw() * a.y.raw();
    }
    acc /= 2;
    return Scalar(acc);
}

BBox SimplePolygon::bbox() const {
    BBox box = BBox::of_point(vertices[0]);
    for (const Point2& p : vertices) box.expand(p);
    return box;
}

PointLocation point_in_polygon(const Point2& p, const SimplePolygon& poly) {
    int m = poly.n();
    for (int i = 0; i < m; ++i) {
        Segment e = poly.edge(i);
        if (on_segment(p, e.a, e.b)) return PointLocation::OnBoundary;
    }
    // Crossing number of an upward ray, half-open edge rule so vertices on
    // the ray are counted exactly once.
    bool inside = false;
    for (int i = 0; i < m; ++i) {
        const Point2& a = poly.vertex(i);
        const Point2& b = poly.vertex(i + 1);
        bool a_below = a.y <= p.y;
        bool b_below = b.y <= p.y;
        if (a_below == b_below) continue;
        // Edge straddles the horizontal through p; it crosses the upward ray
        // iff p is strictly left of the edge oriented bottom-to-top.
        int side = orientation_sign(a, b, p);
        if (b_below) side = -side;  // reorient so the edge points upward
        if (side < 0) inside = !inside;
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

std::optional<int> crossing_count(const Segment& s, const SimplePolygon& poly) {
    if (s.a == s.b) return 0;
    int m = poly.n();
    for (int i = 0; i < m; ++i) {
        if (strictly_inside_segment(poly.vertices[i], s.a, s.b)) return std::nullopt;
    }
    int count = 0;
    for (int i = 0; i < m; ++i) {
        Segment e = poly.edge(i);
        SegmentMeet meet = segment_meet(s, e);
        if (meet.kind == SegmentMeetKind::Overlap) return std::nullopt;
        if (segments_properly_cross(s, e)) ++count;
    }
    return count;
}

std::string ValidationIssue::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::TooFewVertices:
            out << "polygon needs at least 3 vertices";
            break;
        case Kind::RepeatedVertex:
            out << "repeated vertex at indices " << indices[0] << " and " << indices[1];
            break;
        case Kind::CollinearTriple:
            out << "collinear consecutive vertices at indices " << indices[0] << ", "
                << indices[1] << ", " << indices[2];
            break;
        case Kind::SelfIntersection:
            out << "edges " << indices[0] << " and " << indices[1] << " intersect";
            break;
        case Kind::ZeroArea:
            out << "polygon has zero area";
            break;
    }
    return out.str();
}

ValidationResult validate_polygon(std::vector<Point2> vertices, std::string name) {
    ValidationResult result;
    int m = static_cast<int>(vertices.size());
    if (m < 3) {
        result.issue = ValidationIssue{ValidationIssue::Kind::TooFewVertices, {m}};
        return result;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (vertices[i] == vertices[j]) {
                result.issue = ValidationIssue{ValidationIssue::Kind::RepeatedVertex, {i, j}};
                return result;
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % m];
        const Point2& c = vertices[(i + 2) % m];
        if (orientation_sign(a, b, c) == 0) {
            result.issue = ValidationIssue{
                ValidationIssue::Kind::CollinearTriple, {i, (i + 1) % m, (i + 2) % m}};
            return result;
        }
    }
    auto edge_at = [&](int i) {
        return Segment{vertices[i], vertices[(i + 1) % m]};
    };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            SegmentMeet meet = segment_meet(edge_at(i), edge_at(j));
            if (meet.kind == SegmentMeetKind::None) continue;
            if (adjacent) {
                // Adjacent edges legitimately share one endpoint; anything
                // more is an intersection. Overlaps would have been caught as
                // collinear triples already.
                const Point2& shared = (j == i + 1) ? vertices[j] : vertices[0];
                if (meet.kind == SegmentMeetKind::Point && meet.point == shared) continue;
            }
            result.issue = ValidationIssue{ValidationIssue::Kind::SelfIntersection, {i, j}};
            return result;
        }
    }
    SimplePolygon poly{std::move(vertices), std::move(name)};
    Scalar area = poly.signed_area();
    if (area.sign() == 0) {
        result.issue = ValidationIssue{ValidationIssue::Kind::ZeroArea, {}};
        return result;
    }
    if (area.sign() < 0) {
        std::reverse(poly.vertices.begin(), poly.vertices.end());
        result.reversed = true;
    }
    result.polygon = std::move(poly);
    return result;
}

}  // namespace kshadow
