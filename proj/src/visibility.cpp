#include "kshadow/visibility.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

#include "kshadow/errors.h"

namespace kshadow {

namespace {

#define KS_CHECK(cond)                                                           \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::fprintf(stderr, "visibility invariant failed: %s (%s:%d)\n",    \
                         #cond, __FILE__, __LINE__);                             \
            std::abort();                                                        \
        }                                                                        \
    } while (0)

// Sign of s0 + c1*eps + c2*eps^2 as eps -> 0+: the first nonzero coefficient.
int sign_plus(int s0, const Scalar& c1, const Scalar& c2) {
    if (s0 != 0) return s0;
    int s1 = c1.sign();
    if (s1 != 0) return s1;
    return c2.sign();
}

// Appends the chords of the line through base and through (clipped to the
// polygon) to out. Chord endpoints lie on the polygon boundary, and a chord
// is cut wherever the line meets the boundary, so tangent touch points stay
// subdivision vertices.
void append_line_chords(std::vector<Segment>& out, const Point2& base,
                        const Point2& through, const SimplePolygon& P) {
    Point2 dir{through.x - base.x, through.y - base.y};
    BBox bb = P.bbox();

    // Walk far enough along the line to leave the bounding box on both sides.
    Scalar t(1);
    auto stretch = [&t](const Scalar& lo, const Scalar& hi, const Scalar& b, const Scalar& d) {
        if (d.sign() == 0) return;
        t = max(t, max(abs((lo - b) / d), abs((hi - b) / d)));
    };
    stretch(bb.xmin - Scalar(1), bb.xmax + Scalar(1), base.x, dir.x);
    stretch(bb.ymin - Scalar(1), bb.ymax + Scalar(1), base.y, dir.y);
    t += Scalar(1);
    Segment span{Point2{base.x - t * dir.x, base.y - t * dir.y},
                 Point2{base.x + t * dir.x, base.y + t * dir.y}};

    std::vector<Point2> cuts;
    for (int i = 0; i < P.n(); ++i) {
        SegmentMeet m = segment_meet(span, P.edge(i));
        if (m.kind == SegmentMeetKind::Point) {
            cuts.push_back(m.point);
        } else if (m.kind == SegmentMeetKind::Overlap) {
            cuts.push_back(m.ov_a);
            cuts.push_back(m.ov_b);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Scalar half(1, 2);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Point2 mid{(cuts[i].x + cuts[i + 1].x) * half, (cuts[i].y + cuts[i + 1].y) * half};
        if (point_in_polygon(mid, P) != PointLocation::Outside)
            out.push_back(Segment{cuts[i], cuts[i + 1]});
    }
}

}  // namespace

int crossing_count_limit(const Point2& p, const Point2& q, const SimplePolygon& P) {
    if (p == q) return 0;
    int count = 0;
    for (int i = 0; i < P.n(); ++i) {
        Segment e = P.edge(i);
        const Point2& a = e.a;
        const Point2& b = e.b;
        int d1 = orientation_sign(a, b, p);
        if (d1 == 0) continue;  // p on the edge's line: a touch at most, never proper
        // orient(a, b, q_eps) = orient(a, b, q) - (b.y - a.y) eps + (b.x - a.x) eps^2
        int d2 = sign_plus(orientation_sign(a, b, q), -(b.y - a.y), b.x - a.x);
        if (d2 == d1) continue;
        // orient(p, q_eps, a) = orient(p, q, a) + (a.y - p.y) eps - (a.x - p.x) eps^2
        int d3 = sign_plus(orientation_sign(p, q, a), a.y - p.y, -(a.x - p.x));
        if (d3 == 0) continue;  // a == p: shared endpoint
        int d4 = sign_plus(orientation_sign(p, q, b), b.y - p.y, -(b.x - p.x));
        if (d4 == 0 || d4 == d3) continue;
        ++count;
    }
    return count;
}

bool is_k_visible(const Point2& p, const Point2& q, const SimplePolygon& P, int k) {
    if (k < 0) throw InvalidK("k must be nonnegative");
    std::optional<int> c = crossing_count(Segment{p, q}, P);
    int crossings = c ? *c : crossing_count_limit(p, q, P);
    return crossings <= k;
}

bool oracle_is_k_visible(const Point2& p, const Point2& q, const SimplePolygon& P, int k) {
    if (k < 0) throw InvalidK("k must be nonnegative");
    std::optional<int> c = crossing_count(Segment{p, q}, P);
    if (c) return *c <= k;
    // Degenerate: nudge q by (eps, eps^2) with shrinking concrete eps until
    // two consecutive offsets give the same defined count.
    Scalar eps(1, 16);
    int prev = -1;
    for (int round = 0; round < 64; ++round) {
        Point2 moved{q.x + eps, q.y + eps * eps};
        std::optional<int> cc = crossing_count(Segment{p, moved}, P);
        if (cc) {
            if (prev >= 0 && *cc == prev) return prev <= k;
            prev = *cc;
        } else {
            prev = -1;
        }
        eps *= Scalar(1, 16);
    }
    KS_CHECK(false);  // offsets far below the feature scale cannot stay degenerate
    return false;
}

bool VisibilityAnalysis::edge_on_boundary(int e) const {
    for (int s : arr.edges[e].sources)
        if (s < boundary_inputs) return true;
    return false;
}

int VisibilityAnalysis::polygon_edge_of(int e) const {
    for (int s : arr.edges[e].sources)
        if (s < boundary_inputs) return s;
    return -1;
}

VisibilityAnalysis analyze_visibility(const SimplePolygon& P, const Point2& source, int k) {
    int n = P.n();
    std::vector<Segment> inputs;
    inputs.reserve(static_cast<size_t>(n) * 3);
    for (int i = 0; i < n; ++i) inputs.push_back(P.edge(i));

    std::set<LineKey> seen;
    for (int i = 0; i < n; ++i) {
        const Point2& v = P.vertex(i);
        if (v == source) continue;
        if (!seen.insert(LineKey::through(source, v)).second) continue;
        append_line_chords(inputs, source, v, P);
    }

    VisibilityAnalysis A;
    A.boundary_inputs = n;
    A.arr = build_arrangement(inputs);

    size_t faces = A.arr.faces.size();
    A.crossings.resize(faces);
    A.visible.resize(faces);
    for (size_t f = 0; f < faces; ++f) {
        // Representatives avoid every chord line, so the count is never
        // degenerate and is constant over the face.
        std::optional<int> c = crossing_count(Segment{source, A.arr.faces[f].rep}, P);
        KS_CHECK(c.has_value());
        A.crossings[f] = *c;
        A.visible[f] = *c <= k ? 1 : 0;
    }
    return A;
}

RegionFace analysis_face(const VisibilityAnalysis& A, int f) {
    const Arrangement& arr = A.arr;
    RegionFace rf;
    char mine = A.visible[f];
    for (int h : arr.faces[f].outer) {
        rf.cycle.push_back(arr.points[arr.half[h].origin]);
        int e = arr.half[h].edge;
        if (A.edge_on_boundary(e)) {
            rf.tags.push_back(BoundaryTag::Wall);
        } else {
            int g = arr.half[arr.half[h].twin].face;
            KS_CHECK(g >= 0);
            rf.tags.push_back(A.visible[g] == mine ? BoundaryTag::Internal : BoundaryTag::Window);
        }
    }
    return rf;
}

VisibilityRegion k_visibility_region(const SimplePolygon& P, const Point2& source, int k) {
    if (k < 0 || k % 2 != 0) throw InvalidK("region level must be even and nonnegative");
    if (point_in_polygon(source, P) == PointLocation::Outside)
        throw SourceOutside("region source lies outside the polygon");

    VisibilityAnalysis A = analyze_visibility(P, source, k);
    const Arrangement& arr = A.arr;

    VisibilityRegion R;
    R.source = source;
    R.k = k;
    for (int i = 0; i < P.n(); ++i)
        if (P.vertex(i) == source) R.source_vertex = i;
    R.area = Scalar(0);

    for (size_t f = 0; f < arr.faces.size(); ++f) {
        // The boundary plus chords form one connected skeleton, so no face
        // of this subdivision has holes.
        KS_CHECK(arr.faces[f].holes.empty());
        if (!A.visible[f]) continue;
        R.faces.push_back(analysis_face(A, static_cast<int>(f)));
        R.area += arr.faces[f].area;
    }

    // Window edges grouped by supporting line, merged into maximal segments.
    // Touching runs merge; gaps keep sub-segments apart.
    std::map<LineKey, std::vector<Segment>> groups;
    for (size_t e = 0; e < arr.edges.size(); ++e) {
        if (A.edge_on_boundary(static_cast<int>(e))) continue;
        int f1 = arr.half[2 * e].face;
        int f2 = arr.half[2 * e + 1].face;
        KS_CHECK(f1 >= 0 && f2 >= 0);
        if (A.visible[f1] == A.visible[f2]) continue;
        Point2 u = arr.points[arr.edges[e].u];
        Point2 v = arr.points[arr.edges[e].v];
        groups[LineKey::through(u, v)].push_back(Segment{u, v});
    }
    for (auto& [key, segs] : groups) {
        std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
            return a.a < b.a || (a.a == b.a && a.b < b.b);
        });
        Segment cur = segs.front();
        for (size_t i = 1; i < segs.size(); ++i) {
            if (!(cur.b < segs[i].a)) {
                if (cur.b < segs[i].b) cur.b = segs[i].b;
            } else {
                R.windows.push_back(cur);
                cur = segs[i];
            }
        }
        R.windows.push_back(cur);
    }
    return R;
}

std::vector<WindowSegment> region_windows(const VisibilityRegion& R) {
    std::vector<WindowSegment> out;
    out.reserve(R.windows.size());
    for (const Segment& s : R.windows)
        out.push_back(WindowSegment{s, R.source_vertex, R.k});
    return out;
}

}  // namespace kshadow
