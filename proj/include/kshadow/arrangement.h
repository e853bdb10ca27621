#pragma once

#include "kshadow/geometry.h"

#include <utility>
#include <vector>

namespace kshadow {

/// Planar subdivision induced by a set of segments, built with exact
/// arithmetic. Input segments may cross, touch, share endpoints, or overlap
/// collinearly; they are split at every incidence so the stored edges meet
/// only at shared endpoints. Faces are the bounded open regions of the
/// complement; each records its boundary cycles and a strictly interior
/// representative point. Construction and numbering are deterministic:
/// vertices in lexicographic order, edges sorted by endpoints, faces by
/// their sorted outer edge lists.
struct Arrangement {
    std::vector<Point2> points;  // vertex id -> location, lexicographically sorted

    struct Edge {
        int u, v;                  // endpoint vertex ids with points[u] < points[v]
        std::vector<int> sources;  // indices of input segments covering this edge
    };
    std::vector<Edge> edges;  // sorted by (u, v)

    struct Half {
        int origin;  // vertex id
        int edge;    // edge id; halves 2e and 2e+1 are the two sides of edge e
        int twin;
        int next;    // walk with face interior on the left
        int face;    // face id, -1 in the unbounded face
    };
    std::vector<Half> half;

    struct Face {
        std::vector<int> outer;               // half ids, counterclockwise
        std::vector<std::vector<int>> holes;  // clockwise cycles inside this face
        Scalar outer_area;                    // signed area of the outer walk (> 0)
        Scalar area;                          // outer_area plus hole walk areas (<= outer)
        Point2 rep;                           // strictly interior point
    };
    std::vector<Face> faces;

    int target(int h) const { return half[half[h].twin].origin; }
    Segment half_segment(int h) const {
        return Segment{points[half[h].origin], points[target(h)]};
    }
    bool edge_has_source(int e, int source) const;

    struct Location {
        enum class Kind { OnVertex, OnEdge, InFace, Outside };
        Kind kind;
        int index;  // vertex, edge, or face id; -1 for Outside
    };
    Location locate(const Point2& p) const;

    /// Distinct face pairs (f, g), f < g, sharing at least one edge. Every
    /// shared edge has positive length, so this is interior adjacency
    /// through a door, never through a single point.
    std::vector<std::pair<int, int>> face_adjacency() const;
};

Arrangement build_arrangement(const std::vector<Segment>& segments);

}  // namespace kshadow
