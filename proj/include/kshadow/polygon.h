#pragma once

#include "kshadow/geometry.h"

#include <optional>
#include <string>
#include <vector>

namespace kshadow {

/// Counterclockwise simple polygon. Construct through validate_polygon;
/// direct aggregate construction is for code that already holds a valid
/// vertex list (tests, deserialization of trusted artifacts).
struct SimplePolygon {
    std::vector<Point2> vertices;
    std::string name;

    int n() const { return static_cast<int>(vertices.size()); }
    const Point2& vertex(int i) const { return vertices[((i % n()) + n()) % n()]; }
    Segment edge(int i) const { return Segment{vertex(i), vertex(i + 1)}; }
    Scalar signed_area() const;
    Scalar area() const { return signed_area(); }
    BBox bbox() const;
};

enum class PointLocation { Inside, OnBoundary, Outside };

PointLocation point_in_polygon(const Point2& p, const SimplePolygon& poly);

/// Number of polygon edges the segment properly crosses; this is the
/// crossing number used for k-visibility. nullopt reports a degenerate
/// incidence: a polygon vertex in the segment's relative interior, or a
/// positive-length collinear overlap with an edge. Callers decide whether
/// to perturb or reject.
std::optional<int> crossing_count(const Segment& s, const SimplePolygon& poly);

struct ValidationIssue {
    enum class Kind {
        TooFewVertices,
        RepeatedVertex,
        CollinearTriple,
        SelfIntersection,
        ZeroArea,
    };
    Kind kind;
    std::vector<int> indices;
    std::string describe() const;
};

struct ValidationResult {
    std::optional<SimplePolygon> polygon;
    bool reversed = false;  // input was clockwise and has been reversed
    std::optional<ValidationIssue> issue;

    bool ok() const { return polygon.has_value(); }
};

ValidationResult validate_polygon(std::vector<Point2> vertices, std::string name = "");

}  // namespace kshadow
