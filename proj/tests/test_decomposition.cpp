#include "kshadow/decomposition.h"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "kshadow/errors.h"

using namespace kshadow;

namespace {

Point2 pt(long x, long y) { return Point2{Scalar(x), Scalar(y)}; }
Point2 pt(long xn, long xd, long yn, long yd) {
    return Point2{Scalar(xn, xd), Scalar(yn, yd)};
}

SimplePolygon square_polygon() {
    return SimplePolygon{{pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}, "square"};
}

SimplePolygon l_polygon() {
    return SimplePolygon{{pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)}, "L"};
}

SimplePolygon comb_polygon() {
    return SimplePolygon{{pt(0, 0), pt(10, 0), pt(10, 6), pt(8, 6), pt(8, 2), pt(6, 2),
                          pt(6, 6), pt(4, 6), pt(4, 2), pt(2, 2), pt(2, 6), pt(0, 6)},
                         "comb"};
}

int cell_at(const CellDecomposition& D, const Point2& p) {
    CellLocation loc = locate_cell(D, p);
    REQUIRE(loc.kind == CellLocation::Kind::InCell);
    return loc.cell;
}

std::vector<Scalar> sorted_areas(const CellDecomposition& D) {
    std::vector<Scalar> a;
    for (const auto& f : D.arr.faces) a.push_back(f.area);
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

TEST_CASE("square decomposes into a single cell at any level") {
    SimplePolygon sq = square_polygon();
    for (int k : {0, 2, 4}) {
        CellDecomposition D = build_decomposition(sq, k);
        DecompositionStats s = decomposition_stats(D);
        CHECK(s.n == 4);
        CHECK(s.k == k);
        CHECK(s.segment_count == 0);
        CHECK(s.vertex_count == 4);
        CHECK(s.cell_count == 1);
        CHECK(cell_adjacency(D).empty());
        CHECK(cell_at(D, pt(2, 2)) == 0);
        CHECK(locate_cell(D, pt(0, 2)).kind == CellLocation::Kind::OnSkeleton);
        CHECK(locate_cell(D, pt(-1, 0)).kind == CellLocation::Kind::PointOutside);
    }
}

TEST_CASE("L partition segments at k=0 are the four frozen chords") {
    SimplePolygon L = l_polygon();
    std::vector<PartitionSegment> segs = partition_segments(L, 0);
    REQUIRE(segs.size() == 4);

    // Ordered by supporting line, then span: y=2, x=2, then the two
    // diagonal windows on x+y=4 that touch at the reflex vertex but do
    // not overlap, so they stay separate.
    CHECK(segs[0].seg.a == pt(0, 2));
    CHECK(segs[0].seg.b == pt(2, 2));
    CHECK(segs[0].source_vertex == 2);
    CHECK(segs[1].seg.a == pt(2, 0));
    CHECK(segs[1].seg.b == pt(2, 2));
    CHECK(segs[1].source_vertex == 4);
    CHECK(segs[2].seg.a == pt(0, 4));
    CHECK(segs[2].seg.b == pt(2, 2));
    CHECK(segs[2].source_vertex == 1);
    CHECK(segs[3].seg.a == pt(2, 2));
    CHECK(segs[3].seg.b == pt(4, 0));
    CHECK(segs[3].source_vertex == 5);
    for (const PartitionSegment& s : segs) {
        CHECK(s.level == 0);
        CHECK(s.provenance.size() == 1);
        // Every partition segment's supporting line passes through its source.
        CHECK(LineKey::through(s.seg.a, s.seg.b).contains(L.vertex(s.source_vertex)));
    }
}

TEST_CASE("L decomposition at k=0 has the five frozen cells") {
    SimplePolygon L = l_polygon();
    CellDecomposition D = build_decomposition(L, 0);
    DecompositionStats s = decomposition_stats(D);
    CHECK(s.n == 6);
    CHECK(s.k == 0);
    CHECK(s.segment_count == 4);
    CHECK(s.vertex_count == 8);  // six corners plus (2,0) and (0,2)
    CHECK(s.cell_count == 5);

    std::vector<Scalar> areas = sorted_areas(D);
    REQUIRE(areas.size() == 5);
    CHECK(areas[0] == Scalar(2));
    CHECK(areas[1] == Scalar(2));
    CHECK(areas[2] == Scalar(2));
    CHECK(areas[3] == Scalar(2));
    CHECK(areas[4] == Scalar(4));
}

TEST_CASE("L adjacency at k=0 is two pendant pairs off the kernel") {
    SimplePolygon L = l_polygon();
    CellDecomposition D = build_decomposition(L, 0);

    int sq = cell_at(D, pt(1, 1));            // kernel square
    int bm = cell_at(D, pt(3, 1, 1, 2));      // triangle (2,0),(4,0),(2,2): (3, 1/2)
    int br = cell_at(D, pt(7, 2, 3, 2));      // triangle (4,0),(4,2),(2,2): (7/2, 3/2)
    int ul = cell_at(D, pt(1, 2, 5, 2));      // triangle (0,2),(2,2),(0,4): (1/2, 5/2)
    int ut = cell_at(D, pt(3, 2, 7, 2));      // triangle (2,2),(2,4),(0,4): (3/2, 7/2)
    std::vector<int> ids{sq, bm, br, ul, ut};
    std::sort(ids.begin(), ids.end());
    CHECK(std::unique(ids.begin(), ids.end()) == ids.end());

    auto adj = cell_adjacency(D);
    using Door = std::pair<int, std::vector<int>>;
    auto has = [&adj](int from, int to, std::vector<int> through) {
        for (const Door& d : adj[from])
            if (d.first == to && d.second == through) return true;
        return false;
    };
    CHECK(adj[sq].size() == 2);
    CHECK(has(sq, ul, {0}));  // across y=2
    CHECK(has(sq, bm, {1}));  // across x=2
    CHECK(adj[bm].size() == 2);
    CHECK(has(bm, br, {3}));  // across (2,2)-(4,0)
    CHECK(adj[ul].size() == 2);
    CHECK(has(ul, ut, {2}));  // across (0,4)-(2,2)
    CHECK(adj[br].size() == 1);
    CHECK(adj[ut].size() == 1);
}

TEST_CASE("locate_cell reports skeleton and exterior") {
    SimplePolygon L = l_polygon();
    CellDecomposition D = build_decomposition(L, 0);
    for (Point2 p : {pt(2, 1), pt(1, 2), pt(1, 0), pt(0, 0), pt(2, 2), pt(3, 1)}) {
        CellLocation loc = locate_cell(D, p);
        CHECK(loc.kind == CellLocation::Kind::OnSkeleton);
        CHECK(loc.cell == -1);
    }
    for (Point2 p : {pt(5, 5), pt(3, 3), pt(-1, -1)}) {
        CHECK(locate_cell(D, p).kind == CellLocation::Kind::PointOutside);
    }
}

TEST_CASE("L at k=2 gains no segments beyond k=0") {
    SimplePolygon L = l_polygon();
    std::vector<PartitionSegment> base = partition_segments(L, 0);
    std::vector<PartitionSegment> more = partition_segments(L, 2);
    REQUIRE(base.size() == more.size());
    for (size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].seg.a == more[i].seg.a);
        CHECK(base[i].seg.b == more[i].seg.b);
        CHECK(base[i].provenance == more[i].provenance);
    }
    DecompositionStats s = decomposition_stats(build_decomposition(L, 2));
    CHECK(s.k == 2);
    CHECK(s.segment_count == 4);
    CHECK(s.cell_count == 5);
}

TEST_CASE("comb decomposition conserves area exactly") {
    SimplePolygon comb = comb_polygon();
    for (int k : {0, 2}) {
        CellDecomposition D = build_decomposition(comb, k);
        Scalar total(0);
        for (const auto& f : D.arr.faces) total += f.area;
        CHECK(total == Scalar(44));
        CHECK(decomposition_stats(D).segment_count > 0);
    }
}

TEST_CASE("partition point set grows with the level") {
    SimplePolygon comb = comb_polygon();
    std::vector<PartitionSegment> base = partition_segments(comb, 0);
    std::vector<PartitionSegment> more = partition_segments(comb, 2);
    CHECK(more.size() >= base.size());
    for (const PartitionSegment& old : base) {
        bool covered = false;
        for (const PartitionSegment& s : more)
            if (on_segment(old.seg.a, s.seg.a, s.seg.b) &&
                on_segment(old.seg.b, s.seg.a, s.seg.b))
                covered = true;
        CHECK(covered);
    }
}

TEST_CASE("adjacency is symmetric with valid doors everywhere") {
    SimplePolygon comb = comb_polygon();
    CellDecomposition D = build_decomposition(comb, 2);
    auto adj = cell_adjacency(D);
    int cells = static_cast<int>(D.arr.faces.size());
    int segs = static_cast<int>(D.segments.size());
    for (const auto& [c, doors] : adj) {
        CHECK(c >= 0);
        CHECK(c < cells);
        for (const auto& [d, ids] : doors) {
            CHECK(d >= 0);
            CHECK(d < cells);
            CHECK(d != c);
            CHECK(!ids.empty());
            for (int id : ids) {
                CHECK(id >= 0);
                CHECK(id < segs);
            }
            bool back = false;
            for (const auto& [e, ids2] : adj[d])
                if (e == c && ids2 == ids) back = true;
            CHECK(back);
        }
    }
    // Representatives locate back into their own cells.
    for (int f = 0; f < cells; ++f) {
        CellLocation loc = locate_cell(D, D.arr.faces[f].rep);
        REQUIRE(loc.kind == CellLocation::Kind::InCell);
        CHECK(loc.cell == f);
    }
}

TEST_CASE("decomposition is deterministic across rebuilds") {
    SimplePolygon comb = comb_polygon();
    CellDecomposition a = build_decomposition(comb, 2);
    CellDecomposition b = build_decomposition(comb, 2);
    REQUIRE(a.segments.size() == b.segments.size());
    for (size_t i = 0; i < a.segments.size(); ++i) {
        CHECK(a.segments[i].seg.a == b.segments[i].seg.a);
        CHECK(a.segments[i].seg.b == b.segments[i].seg.b);
        CHECK(a.segments[i].provenance == b.segments[i].provenance);
    }
    REQUIRE(a.arr.points.size() == b.arr.points.size());
    for (size_t i = 0; i < a.arr.points.size(); ++i) CHECK(a.arr.points[i] == b.arr.points[i]);
    REQUIRE(a.arr.faces.size() == b.arr.faces.size());
    for (size_t f = 0; f < a.arr.faces.size(); ++f) {
        CHECK(a.arr.faces[f].outer == b.arr.faces[f].outer);
        CHECK(a.arr.faces[f].area == b.arr.faces[f].area);
    }
    CHECK(cell_adjacency(a) == cell_adjacency(b));
}

TEST_CASE("rejects odd or negative levels") {
    SimplePolygon L = l_polygon();
    CHECK_THROWS_AS(partition_segments(L, 1), InvalidK);
    CHECK_THROWS_AS(partition_segments(L, -2), InvalidK);
    CHECK_THROWS_AS(build_decomposition(L, 3), InvalidK);
}
