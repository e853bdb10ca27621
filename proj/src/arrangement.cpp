#include "kshadow/arrangement.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

namespace kshadow {

namespace {

// Always-on invariant checks: the subdivision is the foundation everything
// else classifies against, so a broken invariant must stop the run even in
// release builds.
#define KS_CHECK(cond)                                                            \
    do {                                                                          \
        if (!(cond)) {                                                            \
            std::fprintf(stderr, "arrangement invariant failed: %s (%s:%d)\n",    \
                         #cond, __FILE__, __LINE__);                              \
            std::abort();                                                         \
        }                                                                         \
    } while (0)

Point2 midpoint(const Segment& s) {
    Scalar half(1, 2);
    return Point2{(s.a.x + s.b.x) * half, (s.a.y + s.b.y) * half};
}

// Parity of upward-ray crossings with the walk's edges. Callers must ensure
// p is not on any walk edge. Spur edges traversed twice cancel out.
bool inside_walk(const std::vector<Segment>& walk, const Point2& p) {
    bool inside = false;
    for (const Segment& e : walk) {
        bool a_below = e.a.y <= p.y;
        bool b_below = e.b.y <= p.y;
        if (a_below == b_below) continue;
        int side = orientation_sign(e.a, e.b, p);
        if (b_below) side = -side;
        if (side < 0) inside = !inside;
    }
    return inside;
}

bool on_walk(const std::vector<Segment>& walk, const Point2& p) {
    for (const Segment& e : walk) {
        if (on_segment(p, e.a, e.b)) return true;
    }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool Arrangement::edge_has_source(int e, int source) const {
    const std::vector<int>& s = edges[e].sources;
    return std::binary_search(s.begin(), s.end(), source);
}

Arrangement build_arrangement(const std::vector<Segment>& input) {
    Arrangement arr;

    std::vector<Segment> segs;
    std::vector<int> seg_source;
    for (int i = 0; i < static_cast<int>(input.size()); ++i) {
        if (input[i].a == input[i].b) continue;
        segs.push_back(input[i]);
        seg_source.push_back(i);
    }
    int m = static_cast<int>(segs.size());
    if (m == 0) return arr;

    // Split every segment at every incidence with every other.
    std::vector<BBox> boxes;
    boxes.reserve(m);
    for (const Segment& s : segs) boxes.push_back(BBox::of_segment(s));
    std::vector<std::vector<Point2>> cuts(m);
    for (int i = 0; i < m; ++i) {
        cuts[i].push_back(segs[i].a);
        cuts[i].push_back(segs[i].b);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!boxes[i].overlaps(boxes[j])) continue;
            SegmentMeet meet = segment_meet(segs[i], segs[j]);
            if (meet.kind == SegmentMeetKind::Point) {
                cuts[i].push_back(meet.point);
                cuts[j].push_back(meet.point);
            } else if (meet.kind == SegmentMeetKind::Overlap) {
                cuts[i].push_back(meet.ov_a);
                cuts[i].push_back(meet.ov_b);
                cuts[j].push_back(meet.ov_a);
                cuts[j].push_back(meet.ov_b);
            }
        }
    }

    // Emit canonical sub-segments; collinear duplicates merge their sources.
    std::map<std::pair<Point2, Point2>, std::vector<int>> submap;
    for (int i = 0; i < m; ++i) {
        std::sort(cuts[i].begin(), cuts[i].end());
        cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
        for (size_t c = 0; c + 1 < cuts[i].size(); ++c) {
            submap[{cuts[i][c], cuts[i][c + 1]}].push_back(seg_source[i]);
        }
    }

    std::map<Point2, int> vid;
    for (const auto& entry : submap) {
        vid.emplace(entry.first.first, 0);
        vid.emplace(entry.first.second, 0);
    }
    for (auto& [p, id] : vid) {
        id = static_cast<int>(arr.points.size());
        arr.points.push_back(p);
    }
    for (auto& [key, sources] : submap) {
        Arrangement::Edge e;
        e.u = vid[key.first];
        e.v = vid[key.second];
        std::sort(sources.begin(), sources.end());
        sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
        e.sources = std::move(sources);
        arr.edges.push_back(std::move(e));
    }

    int V = static_cast<int>(arr.points.size());
    int E = static_cast<int>(arr.edges.size());
    arr.half.resize(2 * E);
    for (int e = 0; e < E; ++e) {
        arr.half[2 * e] = {arr.edges[e].u, e, 2 * e + 1, -1, -2};
        arr.half[2 * e + 1] = {arr.edges[e].v, e, 2 * e, -1, -2};
    }

    // Rotation system: outgoing halves at each vertex in CCW direction order.
    std::vector<std::vector<int>> ring(V);
    for (int h = 0; h < 2 * E; ++h) ring[arr.half[h].origin].push_back(h);
    auto dir_of = [&](int h) {
        return arr.points[arr.target(h)] - arr.points[arr.half[h].origin];
    };
    std::vector<int> ring_pos(2 * E, -1);
    for (int v = 0; v < V; ++v) {
        std::sort(ring[v].begin(), ring[v].end(),
                  [&](int a, int b) { return direction_less(dir_of(a), dir_of(b)); });
        for (size_t i = 0; i + 1 < ring[v].size(); ++i) {
            KS_CHECK(direction_less(dir_of(ring[v][i]), dir_of(ring[v][i + 1])));
        }
        for (size_t i = 0; i < ring[v].size(); ++i) ring_pos[ring[v][i]] = static_cast<int>(i);
    }

    // next(h): rotate the twin clockwise around h's target, which keeps the
    // face interior on the left of every half-edge.
    for (int h = 0; h < 2 * E; ++h) {
        int v = arr.target(h);
        int t = arr.half[h].twin;
        const std::vector<int>& r = ring[v];
        int idx = ring_pos[t];
        arr.half[h].next = r[(idx - 1 + static_cast<int>(r.size())) % r.size()];
    }

    // Orbits of next() are the boundary walks of the subdivision's faces.
    struct Orbit {
        std::vector<int> cycle;
        Scalar area;
    };
    std::vector<Orbit> orbits;
    std::vector<int> orbit_of(2 * E, -1);
    for (int h0 = 0; h0 < 2 * E; ++h0) {
        if (orbit_of[h0] != -1) continue;
        Orbit orbit;
        mpq_class acc = 0;
        int h = h0;
        do {
            orbit_of[h] = static_cast<int>(orbits.size());
            orbit.cycle.push_back(h);
            const Point2& a = arr.points[arr.half[h].origin];
            const Point2& b = arr.points[arr.target(h)];
            acc += a.x.raw() * b.y.raw() - b.x.raw() * a.y.raw();
            h = arr.half[h].next;
        } while (h != h0);
        acc /= 2;
        orbit.area = Scalar(acc);
        // rotate so the cycle starts at its smallest half id
        auto mn = std::min_element(orbit.cycle.begin(), orbit.cycle.end());
        std::rotate(orbit.cycle.begin(), mn, orbit.cycle.end());
        orbits.push_back(std::move(orbit));
    }

    mpq_class total = 0;
    for (const Orbit& o : orbits) total += o.area.raw();
    KS_CHECK(total == 0);

    // The walk bounding the unbounded face encloses the most area with
    // negative sign, so take the orbit of minimal signed area. Other
    // non-positive orbits are hole walks; containment sorts out which face
    // each belongs to (floating components fall back to the unbounded face).
    int unbounded = 0;
    for (int i = 1; i < static_cast<int>(orbits.size()); ++i) {
        if (orbits[i].area < orbits[unbounded].area) unbounded = i;
    }
    std::vector<int> face_orbits;
    std::vector<int> hole_orbits;
    for (int i = 0; i < static_cast<int>(orbits.size()); ++i) {
        if (i == unbounded) continue;
        if (orbits[i].area.sign() > 0) {
            face_orbits.push_back(i);
        } else {
            hole_orbits.push_back(i);
        }
    }
    if (!face_orbits.empty()) KS_CHECK(orbits[unbounded].area.sign() < 0);

    // Canonical face order: by sorted edge-id list of the outer cycle.
    std::vector<std::vector<int>> face_key(face_orbits.size());
    for (size_t f = 0; f < face_orbits.size(); ++f) {
        for (int h : orbits[face_orbits[f]].cycle) face_key[f].push_back(arr.half[h].edge);
        std::sort(face_key[f].begin(), face_key[f].end());
    }
    std::vector<int> order(face_orbits.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return face_key[a] < face_key[b]; });

    arr.faces.resize(face_orbits.size());
    for (size_t rank = 0; rank < order.size(); ++rank) {
        const Orbit& orbit = orbits[face_orbits[order[rank]]];
        Arrangement::Face& face = arr.faces[rank];
        face.outer = orbit.cycle;
        face.outer_area = orbit.area;
        face.area = orbit.area;
        for (int h : face.outer) arr.half[h].face = static_cast<int>(rank);
    }

    std::vector<std::vector<Segment>> outer_walk(arr.faces.size());
    for (size_t f = 0; f < arr.faces.size(); ++f) {
        for (int h : arr.faces[f].outer) outer_walk[f].push_back(arr.half_segment(h));
    }

    // Assign every hole walk to the innermost face strictly containing it;
    // walks floating outside every face belong to the unbounded face.
    std::sort(hole_orbits.begin(), hole_orbits.end(), [&](int a, int b) {
        return orbits[a].cycle.front() < orbits[b].cycle.front();
    });
    for (int oi : hole_orbits) {
        const Orbit& orbit = orbits[oi];
        Point2 w = arr.points[arr.half[orbit.cycle.front()].origin];
        for (int h : orbit.cycle) {
            const Point2& c = arr.points[arr.half[h].origin];
            if (c < w) w = c;
        }
        int best = -1;
        for (size_t f = 0; f < arr.faces.size(); ++f) {
            if (on_walk(outer_walk[f], w)) continue;
            if (!inside_walk(outer_walk[f], w)) continue;
            if (best == -1 || arr.faces[f].outer_area < arr.faces[best].outer_area) {
                best = static_cast<int>(f);
            }
        }
        for (int h : orbit.cycle) arr.half[h].face = best;
        if (best >= 0) {
            arr.faces[best].holes.push_back(orbit.cycle);
            arr.faces[best].area += orbit.area;
        }
    }
    for (int h : orbits[unbounded].cycle) arr.half[h].face = -1;
    for (int h = 0; h < 2 * E; ++h) KS_CHECK(arr.half[h].face != -2);
    for (const Arrangement::Face& f : arr.faces) KS_CHECK(f.area.sign() > 0);

    // Euler check over the skeleton: faces = components + E - V.
    UnionFind uf(V);
    for (const Arrangement::Edge& e : arr.edges) uf.unite(e.u, e.v);
    std::set<int> roots;
    for (int v = 0; v < V; ++v) roots.insert(uf.find(v));
    KS_CHECK(static_cast<int>(arr.faces.size()) ==
             static_cast<int>(roots.size()) + E - V);

    // Interior representative: step left off an outer edge's midpoint,
    // halving the step until strictly inside.
    for (size_t f = 0; f < arr.faces.size(); ++f) {
        Arrangement::Face& face = arr.faces[f];
        std::vector<Segment> all_walks = outer_walk[f];
        for (const std::vector<int>& hole : face.holes) {
            for (int h : hole) all_walks.push_back(arr.half_segment(h));
        }
        Segment s0 = arr.half_segment(face.outer.front());
        Point2 mid = midpoint(s0);
        Point2 d = s0.b - s0.a;
        Point2 normal{-(d.y), d.x};
        Scalar span = max(normal.x.abs(), normal.y.abs());
        Scalar eps = Scalar(1, 4) / span;
        bool found = false;
        for (int iter = 0; iter < 512 && !found; ++iter, eps *= Scalar(1, 2)) {
            Point2 cand = mid + eps * normal;
            if (on_walk(all_walks, cand)) continue;
            if (!inside_walk(outer_walk[f], cand)) continue;
            bool in_hole = false;
            for (const std::vector<int>& hole : face.holes) {
                std::vector<Segment> hw;
                for (int h : hole) hw.push_back(arr.half_segment(h));
                if (inside_walk(hw, cand)) {
                    in_hole = true;
                    break;
                }
            }
            if (in_hole) continue;
            face.rep = cand;
            found = true;
        }
        KS_CHECK(found);
    }

    return arr;
}

Arrangement::Location Arrangement::locate(const Point2& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p,
                               [](const Point2& a, const Point2& b) { return a < b; });
    if (it != points.end() && *it == p) {
        return {Location::Kind::OnVertex, static_cast<int>(it - points.begin())};
    }
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (on_segment(p, points[edges[e].u], points[edges[e].v])) {
            return {Location::Kind::OnEdge, e};
        }
    }
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        std::vector<Segment> outer;
        for (int h : faces[f].outer) outer.push_back(half_segment(h));
        if (!inside_walk(outer, p)) continue;
        bool in_hole = false;
        for (const std::vector<int>& hole : faces[f].holes) {
            std::vector<Segment> hw;
            for (int h : hole) hw.push_back(half_segment(h));
            if (inside_walk(hw, p)) {
                in_hole = true;
                break;
            }
        }
        if (!in_hole) return {Location::Kind::InFace, f};
    }
    return {Location::Kind::Outside, -1};
}

std::vector<std::pair<int, int>> Arrangement::face_adjacency() const {
    std::set<std::pair<int, int>> pairs;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        int f1 = half[2 * e].face;
        int f2 = half[2 * e + 1].face;
        if (f1 < 0 || f2 < 0 || f1 == f2) continue;
        pairs.insert({std::min(f1, f2), std::max(f1, f2)});
    }
    return std::vector<std::pair<int, int>>(pairs.begin(), pairs.end());
}

}  // namespace kshadow
