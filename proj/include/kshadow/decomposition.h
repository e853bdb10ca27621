#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kshadow/visibility.h"

namespace kshadow {

/// One maximal straight piece of the partition skeleton. Merged pieces keep
/// every contributing (vertex, level) pair; source_vertex and level are the
/// first contributor in that sorted list.
struct PartitionSegment {
    Segment seg;
    int source_vertex;
    int level;
    std::vector<std::pair<int, int>> provenance;
};

/// Window segments of every vertex's m-visibility region, for every even
/// m <= k. Collinear contributions overlapping with positive length merge
/// into maximal segments; pieces that only touch at a point stay separate.
/// Ordered by supporting line, then by span. Throws InvalidK.
std::vector<PartitionSegment> partition_segments(const SimplePolygon& P, int k);

/// Subdivision of the polygon by its boundary and all partition segments.
/// Cells are the faces of the subdivision; a CellId is a face id.
struct CellDecomposition {
    SimplePolygon polygon;
    int k = 0;
    std::vector<PartitionSegment> segments;
    Arrangement arr;
};

CellDecomposition build_decomposition(const SimplePolygon& P, int k);

struct CellLocation {
    enum class Kind { InCell, OnSkeleton, PointOutside };
    Kind kind;
    int cell;  // valid for InCell, -1 otherwise
};

/// Strictly interior points map to their cell; points on any subdivision
/// edge or vertex (the polygon boundary included) are OnSkeleton.
CellLocation locate_cell(const CellDecomposition& D, const Point2& p);

/// cell -> sorted (neighbor, partition segment ids along the shared border).
/// Two cells are adjacent when they share an edge of positive length that is
/// not on the polygon boundary.
std::map<int, std::vector<std::pair<int, std::vector<int>>>> cell_adjacency(
    const CellDecomposition& D);

struct DecompositionStats {
    int n;
    int k;
    int segment_count;
    int vertex_count;
    int cell_count;
};

DecompositionStats decomposition_stats(const CellDecomposition& D);

}  // namespace kshadow
