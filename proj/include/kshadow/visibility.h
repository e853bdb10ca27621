#pragma once

#include <vector>

#include "kshadow/arrangement.h"
#include "kshadow/polygon.h"

namespace kshadow {

// Two points p, q are k-visible when the open segment pq properly crosses the
// polygon boundary at most k times.  All predicates below are exact.

/// Crossing count of p -> q against the boundary with q symbolically displaced
/// by (eps, eps^2) for an infinitesimal eps > 0.  The limit is always defined,
/// resolves every degenerate incidence deterministically, and agrees with
/// crossing_count wherever that is defined.
int crossing_count_limit(const Point2& p, const Point2& q, const SimplePolygon& P);

/// Exact k-visibility test.  Uses crossing_count directly and falls back to
/// the symbolic limit on a degenerate incidence.  p == q is always visible.
bool is_k_visible(const Point2& p, const Point2& q, const SimplePolygon& P, int k);

/// Independent ground-truth path: plain edge enumeration, retried with a
/// shrinking concrete offset of q on degeneracy.  Shares no resolution
/// machinery with is_k_visible; used to cross-validate it.
bool oracle_is_k_visible(const Point2& p, const Point2& q, const SimplePolygon& P, int k);

/// Subdivision of the polygon by its boundary plus the full chords of every
/// line through `source` and a polygon vertex, with each face classified by
/// its exact crossing count from source.  The count is constant within a
/// face, and face representatives are never degenerate for the source.
struct VisibilityAnalysis {
    Arrangement arr;
    std::vector<int> crossings;  // per face: crossings from source to its rep
    std::vector<char> visible;   // per face: crossings[f] <= k
    int boundary_inputs = 0;     // input segments [0, boundary_inputs) are polygon edges

    bool edge_on_boundary(int e) const;
    /// Polygon edge index an arrangement edge lies on, or -1.
    int polygon_edge_of(int e) const;
};

VisibilityAnalysis analyze_visibility(const SimplePolygon& P, const Point2& source, int k);

enum class BoundaryTag { Wall, Window, Internal };

struct RegionFace {
    std::vector<Point2> cycle;      // counterclockwise
    std::vector<BoundaryTag> tags;  // tag of the edge cycle[i] -> cycle[i+1]
};

struct VisibilityRegion {
    Point2 source;
    int source_vertex = -1;  // index in the polygon, or -1 for a non-vertex source
    int k = 0;
    std::vector<RegionFace> faces;
    std::vector<Segment> windows;  // maximal merged window segments on the region boundary
    Scalar area;
};

struct WindowSegment {
    Segment seg;
    int source_vertex;
    int level;
};

/// Region of all points k-visible from source (k even).  Faces tile the
/// region with disjoint interiors; edges on the polygon boundary are tagged
/// Wall, edges separating the region from shadow are tagged Window, edges
/// interior to the region are tagged Internal.
/// Throws InvalidK (k negative or odd) or SourceOutside.
VisibilityRegion k_visibility_region(const SimplePolygon& P, const Point2& source, int k);

/// The region's window segments annotated with the source vertex and level.
std::vector<WindowSegment> region_windows(const VisibilityRegion& R);

/// Face f of an analysis as a tagged cycle: Wall on the polygon boundary,
/// Window against a face of opposite visibility, Internal otherwise.
RegionFace analysis_face(const VisibilityAnalysis& A, int f);

}  // namespace kshadow
