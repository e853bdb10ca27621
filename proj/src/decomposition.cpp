#include "kshadow/decomposition.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "kshadow/errors.h"

namespace kshadow {

namespace {

#define KS_CHECK(cond)                                                              \
    do {                                                                            \
        if (!(cond)) {                                                              \
            std::fprintf(stderr, "decomposition invariant failed: %s (%s:%d)\n",    \
                         #cond, __FILE__, __LINE__);                                \
            std::abort();                                                           \
        }                                                                           \
    } while (0)

}  // namespace

std::vector<PartitionSegment> partition_segments(const SimplePolygon& P, int k) {
    if (k < 0 || k % 2 != 0) throw InvalidK("partition level must be even and nonnegative");

    struct Piece {
        Segment seg;
        int vertex;
        int level;
    };
    std::map<LineKey, std::vector<Piece>> by_line;
    for (int m = 0; m <= k; m += 2) {
        for (int v = 0; v < P.n(); ++v) {
            VisibilityRegion R = k_visibility_region(P, P.vertex(v), m);
            for (const Segment& w : R.windows)
                by_line[LineKey::through(w.a, w.b)].push_back(Piece{w, v, m});
        }
    }

    std::vector<PartitionSegment> out;
    for (auto& [key, pieces] : by_line) {
        std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            if (a.seg.a != b.seg.a) return a.seg.a < b.seg.a;
            if (a.seg.b != b.seg.b) return a.seg.b < b.seg.b;
            if (a.vertex != b.vertex) return a.vertex < b.vertex;
            return a.level < b.level;
        });
        PartitionSegment cur;
        cur.seg = pieces.front().seg;
        cur.provenance = {{pieces.front().vertex, pieces.front().level}};
        auto flush = [&out](PartitionSegment& ps) {
            std::sort(ps.provenance.begin(), ps.provenance.end());
            ps.provenance.erase(std::unique(ps.provenance.begin(), ps.provenance.end()),
                                ps.provenance.end());
            ps.source_vertex = ps.provenance.front().first;
            ps.level = ps.provenance.front().second;
            out.push_back(std::move(ps));
        };
        for (size_t i = 1; i < pieces.size(); ++i) {
            const Piece& p = pieces[i];
            if (p.seg.a < cur.seg.b) {  // positive-length overlap; a touch starts anew
                if (cur.seg.b < p.seg.b) cur.seg.b = p.seg.b;
                cur.provenance.push_back({p.vertex, p.level});
            } else {
                flush(cur);
                cur = PartitionSegment{};
                cur.seg = p.seg;
                cur.provenance = {{p.vertex, p.level}};
            }
        }
        flush(cur);
    }
    return out;
}

CellDecomposition build_decomposition(const SimplePolygon& P, int k) {
    CellDecomposition D;
    D.polygon = P;
    D.k = k;
    D.segments = partition_segments(P, k);

    std::vector<Segment> inputs;
    inputs.reserve(P.n() + D.segments.size());
    for (int i = 0; i < P.n(); ++i) inputs.push_back(P.edge(i));
    for (const PartitionSegment& s : D.segments) inputs.push_back(s.seg);
    D.arr = build_arrangement(inputs);

    // Partition segments end on the boundary, so the skeleton is connected
    // and the cells tile the polygon exactly.
    Scalar total(0);
    for (const Arrangement::Face& f : D.arr.faces) {
        KS_CHECK(f.holes.empty());
        total += f.area;
    }
    KS_CHECK(total == P.area());
    return D;
}

CellLocation locate_cell(const CellDecomposition& D, const Point2& p) {
    Arrangement::Location loc = D.arr.locate(p);
    switch (loc.kind) {
        case Arrangement::Location::Kind::OnVertex:
        case Arrangement::Location::Kind::OnEdge:
            return CellLocation{CellLocation::Kind::OnSkeleton, -1};
        case Arrangement::Location::Kind::InFace:
            return CellLocation{CellLocation::Kind::InCell, loc.index};
        default:
            return CellLocation{CellLocation::Kind::PointOutside, -1};
    }
}

std::map<int, std::vector<std::pair<int, std::vector<int>>>> cell_adjacency(
    const CellDecomposition& D) {
    int n = D.polygon.n();
    std::map<std::pair<int, int>, std::set<int>> doors;
    for (size_t e = 0; e < D.arr.edges.size(); ++e) {
        const Arrangement::Edge& edge = D.arr.edges[e];
        bool on_boundary = false;
        for (int s : edge.sources)
            if (s < n) on_boundary = true;
        if (on_boundary) continue;
        int f1 = D.arr.half[2 * e].face;
        int f2 = D.arr.half[2 * e + 1].face;
        KS_CHECK(f1 >= 0 && f2 >= 0);
        if (f1 == f2) continue;
        auto& ids = doors[{std::min(f1, f2), std::max(f1, f2)}];
        for (int s : edge.sources) {
            KS_CHECK(s >= n);
            ids.insert(s - n);
        }
    }
    std::map<int, std::vector<std::pair<int, std::vector<int>>>> out;
    for (const auto& [fg, ids] : doors) {
        std::vector<int> list(ids.begin(), ids.end());
        out[fg.first].push_back({fg.second, list});
        out[fg.second].push_back({fg.first, list});
    }
    for (auto& [cell, neighbors] : out) std::sort(neighbors.begin(), neighbors.end());
    return out;
}

DecompositionStats decomposition_stats(const CellDecomposition& D) {
    return DecompositionStats{D.polygon.n(), D.k, static_cast<int>(D.segments.size()),
                              static_cast<int>(D.arr.points.size()),
                              static_cast<int>(D.arr.faces.size())};
}

}  // namespace kshadow
