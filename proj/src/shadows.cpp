#include "kshadow/shadows.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "kshadow/errors.h"

namespace kshadow {

namespace {

#define KS_CHECK(cond)                                                        \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::fprintf(stderr, "shadow invariant failed: %s (%s:%d)\n",     \
                         #cond, __FILE__, __LINE__);                          \
            std::abort();                                                     \
        }                                                                     \
    } while (0)

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

int overlap_size(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}

long floor_scalar(const Scalar& s) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
    return q.get_si();
}

}  // namespace

std::vector<Shadow> shadows_of(const SimplePolygon& P, const Point2& p, int k) {
    if (k < 0 || k % 2 != 0) throw InvalidK("shadow level must be even and nonnegative");
    if (point_in_polygon(p, P) != PointLocation::Inside)
        throw PointOutside("shadow observer must lie strictly inside the polygon");

    VisibilityAnalysis A = analyze_visibility(P, p, k);
    const Arrangement& arr = A.arr;
    int faces = static_cast<int>(arr.faces.size());

    UnionFind uf(faces);
    for (size_t e = 0; e < arr.edges.size(); ++e) {
        int f1 = arr.half[2 * e].face;
        int f2 = arr.half[2 * e + 1].face;
        if (f1 < 0 || f2 < 0) continue;
        if (!A.visible[f1] && !A.visible[f2]) uf.unite(f1, f2);
    }

    std::map<int, std::vector<int>> components;  // root -> member faces, ascending
    for (int f = 0; f < faces; ++f)
        if (!A.visible[f]) components[uf.find(f)].push_back(f);

    std::vector<Shadow> out;
    for (const auto& [root, members] : components) {
        Shadow s;
        s.area = Scalar(0);
        std::set<Point2> corners;
        std::set<int> feats;
        for (int f : members) {
            s.faces.push_back(analysis_face(A, f));
            s.area += arr.faces[f].area;
            for (int h : arr.faces[f].outer) {
                corners.insert(arr.points[arr.half[h].origin]);
                int pe = A.polygon_edge_of(arr.half[h].edge);
                if (pe >= 0) feats.insert(edge_feature(pe));
            }
        }
        for (int i = 0; i < P.n(); ++i)
            if (corners.count(P.vertex(i))) feats.insert(vertex_feature(i));
        s.features.assign(feats.begin(), feats.end());
        s.kind = classify_shadow(s);
        out.push_back(std::move(s));
    }
    return out;
}

ShadowKind classify_shadow(const Shadow& s) {
    for (int id : s.features)
        if (is_vertex_feature(id)) return ShadowKind::VertexShadow;
    return ShadowKind::EdgeShadow;
}

bool ShadowSignature::has_duplicates() const {
    for (size_t i = 1; i < shadows.size(); ++i)
        if (shadows[i] == shadows[i - 1]) return true;
    return false;
}

ShadowSignature shadow_signature(const SimplePolygon& P, const Point2& p, int k) {
    ShadowSignature sig;
    sig.observer = p;
    for (const Shadow& s : shadows_of(P, p, k))
        sig.shadows.push_back({s.kind, s.features});
    std::sort(sig.shadows.begin(), sig.shadows.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second < b.second;
                  return a.first < b.first;
              });
    return sig;
}

SignatureDiff diff_signatures(const ShadowSignature& before, const ShadowSignature& after) {
    int no = static_cast<int>(before.shadows.size());
    int nn = static_cast<int>(after.shadows.size());
    SignatureDiff diff;

    std::vector<std::vector<int>> ov(no, std::vector<int>(nn, 0));
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < nn; ++j)
            ov[i][j] = overlap_size(before.shadows[i].second, after.shadows[j].second);

    // Argmax partners per side. A unique argmax forces a link. A tied argmax
    // is immaterial when every tied candidate is forced from the other side
    // anyway (the merge and split patterns); otherwise the matching is not
    // unique and gets reported, with all candidates linked conservatively.
    std::vector<std::vector<int>> old_arg(no), new_arg(nn);
    for (int i = 0; i < no; ++i) {
        int best = 0;
        for (int j = 0; j < nn; ++j) best = std::max(best, ov[i][j]);
        if (best == 0) continue;
        for (int j = 0; j < nn; ++j)
            if (ov[i][j] == best) old_arg[i].push_back(j);
    }
    for (int j = 0; j < nn; ++j) {
        int best = 0;
        for (int i = 0; i < no; ++i) best = std::max(best, ov[i][j]);
        if (best == 0) continue;
        for (int i = 0; i < no; ++i)
            if (ov[i][j] == best) new_arg[j].push_back(i);
    }

    std::set<std::pair<int, int>> forced;
    for (int i = 0; i < no; ++i)
        if (old_arg[i].size() == 1) forced.insert({i, old_arg[i][0]});
    for (int j = 0; j < nn; ++j)
        if (new_arg[j].size() == 1) forced.insert({new_arg[j][0], j});

    // Nodes 0..no-1 are old shadows, no..no+nn-1 new ones.
    UnionFind uf(no + nn);
    for (const auto& [i, j] : forced) uf.unite(i, no + j);
    for (int i = 0; i < no; ++i) {
        if (old_arg[i].size() <= 1) continue;
        for (int j : old_arg[i]) {
            if (!forced.count({i, j})) diff.ambiguous = true;
            uf.unite(i, no + j);
        }
    }
    for (int j = 0; j < nn; ++j) {
        if (new_arg[j].size() <= 1) continue;
        for (int i : new_arg[j]) {
            if (!forced.count({i, j})) diff.ambiguous = true;
            uf.unite(i, no + j);
        }
    }

    std::map<int, std::pair<std::vector<int>, std::vector<int>>> comps;
    for (int i = 0; i < no; ++i) comps[uf.find(i)].first.push_back(i);
    for (int j = 0; j < nn; ++j) comps[uf.find(no + j)].second.push_back(j);

    auto indistinct = [](const std::vector<int>& ids, const ShadowSignature& sig) {
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b)
                if (sig.shadows[ids[a]].second == sig.shadows[ids[b]].second) return true;
        return false;
    };

    for (const auto& [root, comp] : comps) {
        const std::vector<int>& olds = comp.first;
        const std::vector<int>& news = comp.second;
        diff.groups.push_back(comp);
        // Duplicate feature sets inside one component: the correspondence
        // between them cannot be pinned down.
        if (indistinct(olds, before) || indistinct(news, after)) diff.ambiguous = true;
        if (olds.empty()) {
            KS_CHECK(news.size() == 1);
            diff.events.push_back({ShadowEvent::Type::Appear, {}, news});
        } else if (news.empty()) {
            KS_CHECK(olds.size() == 1);
            diff.events.push_back({ShadowEvent::Type::Disappear, olds, {}});
        } else if (olds.size() > 1 && news.size() == 1) {
            diff.events.push_back({ShadowEvent::Type::Merge, olds, news});
        } else if (olds.size() == 1 && news.size() > 1) {
            diff.events.push_back({ShadowEvent::Type::Split, olds, news});
        } else if (olds.size() > 1 && news.size() > 1) {
            // Compound transition: not expressible in the four events.
            diff.ambiguous = true;
        }
        // one-to-one: a match, feature drift allowed, no event
    }
    return diff;
}

InvarianceReport verify_cell_invariance(const CellDecomposition& D, int samples_per_cell,
                                        uint64_t seed) {
    InvarianceReport report;
    const Arrangement& arr = D.arr;
    Scalar half(1, 2);

    for (int cell = 0; cell < static_cast<int>(arr.faces.size()); ++cell) {
        InvarianceCellReport cr;
        cr.cell = cell;
        std::vector<Point2> samples;

        // A point just inside each corner: walk along the outgoing edge and
        // peel inward, shrinking until we land in the cell.
        for (int h : arr.faces[cell].outer) {
            Point2 c = arr.points[arr.half[h].origin];
            Point2 d = arr.points[arr.target(h)];
            Point2 dir{d.x - c.x, d.y - c.y};
            Point2 normal{-dir.y, dir.x};  // interior side of a CCW cycle
            Scalar t = half;
            bool placed = false;
            for (int iter = 0; iter < 128 && !placed; ++iter) {
                Point2 q{c.x + t * dir.x + t * t * normal.x,
                         c.y + t * dir.y + t * t * normal.y};
                Arrangement::Location loc = arr.locate(q);
                if (loc.kind == Arrangement::Location::Kind::InFace && loc.index == cell) {
                    samples.push_back(q);
                    placed = true;
                }
                t = t * half;
            }
            KS_CHECK(placed);
        }

        // Interior rejection samples on a fine rational grid over the bbox.
        BBox bb = BBox::of_point(arr.points[arr.half[arr.faces[cell].outer[0]].origin]);
        for (int h : arr.faces[cell].outer) {
            const Point2& pt = arr.points[arr.half[h].origin];
            bb.xmin = min(bb.xmin, pt.x);
            bb.xmax = max(bb.xmax, pt.x);
            bb.ymin = min(bb.ymin, pt.y);
            bb.ymax = max(bb.ymax, pt.y);
        }
        std::mt19937_64 rng(mix_seed(seed, static_cast<uint64_t>(cell)));
        Scalar w = bb.xmax - bb.xmin;
        Scalar hgt = bb.ymax - bb.ymin;
        int accepted = 0;
        for (int attempt = 0; attempt < 256 * samples_per_cell && accepted < samples_per_cell;
             ++attempt) {
            Scalar fx(static_cast<long>(rng() % 4097), 4096);
            Scalar fy(static_cast<long>(rng() % 4097), 4096);
            Point2 q{bb.xmin + w * fx, bb.ymin + hgt * fy};
            Arrangement::Location loc = arr.locate(q);
            if (loc.kind == Arrangement::Location::Kind::InFace && loc.index == cell) {
                samples.push_back(q);
                ++accepted;
            }
        }

        cr.samples = static_cast<int>(samples.size());
        ShadowSignature first;
        for (size_t i = 0; i < samples.size(); ++i) {
            ShadowSignature sig = shadow_signature(D.polygon, samples[i], D.k);
            if (sig.has_duplicates()) cr.duplicate_features = true;
            if (i == 0) {
                first = sig;
            } else if (cr.pass && sig != first) {
                cr.pass = false;
                cr.witness_a = samples[0];
                cr.witness_b = samples[i];
            }
        }
        report.signatures_compared += cr.samples;
        report.all_pass = report.all_pass && cr.pass;
        report.cells.push_back(std::move(cr));
        ++report.cells_checked;
    }
    return report;
}

GridShadows oracle_shadows_grid(const SimplePolygon& P, const Point2& p, int k, int resolution) {
    KS_CHECK(resolution >= 64);
    GridShadows out;
    out.resolution = resolution;
    BBox bb = P.bbox();
    Scalar w = bb.xmax - bb.xmin;
    Scalar h = bb.ymax - bb.ymin;
    long res = resolution;

    // -1 outside or visible, otherwise component id assigned by flood fill.
    std::vector<int> mark(static_cast<size_t>(res) * res, -1);
    auto center = [&](long i, long j) {
        return Point2{bb.xmin + w * Scalar(2 * i + 1, 2 * res),
                      bb.ymin + h * Scalar(2 * j + 1, 2 * res)};
    };
    std::vector<char> shadowed(static_cast<size_t>(res) * res, 0);
    for (long j = 0; j < res; ++j) {
        for (long i = 0; i < res; ++i) {
            Point2 c = center(i, j);
            if (point_in_polygon(c, P) != PointLocation::Inside) continue;
            if (!oracle_is_k_visible(p, c, P, k)) shadowed[j * res + i] = 1;
        }
    }

    int next = 0;
    std::vector<long> stack;
    for (long j = 0; j < res; ++j) {
        for (long i = 0; i < res; ++i) {
            long at = j * res + i;
            if (!shadowed[at] || mark[at] >= 0) continue;
            int id = next++;
            out.components.push_back(GridComponent{});
            stack.push_back(at);
            mark[at] = id;
            while (!stack.empty()) {
                long cur = stack.back();
                stack.pop_back();
                ++out.components[id].cells;
                long ci = cur % res, cj = cur / res;
                const long di[4] = {1, -1, 0, 0};
                const long dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    long ni = ci + di[d], nj = cj + dj[d];
                    if (ni < 0 || ni >= res || nj < 0 || nj >= res) continue;
                    long nat = nj * res + ni;
                    if (shadowed[nat] && mark[nat] < 0) {
                        mark[nat] = id;
                        stack.push_back(nat);
                    }
                }
            }
        }
    }

    // A vertex falls in a component when a component cell's closed square
    // contains it; check the neighborhood of its raster position.
    for (int v = 0; v < P.n(); ++v) {
        const Point2& pv = P.vertex(v);
        long i0 = w.sign() == 0 ? 0 : floor_scalar((pv.x - bb.xmin) * Scalar(res) / w);
        long j0 = h.sign() == 0 ? 0 : floor_scalar((pv.y - bb.ymin) * Scalar(res) / h);
        std::set<int> seen;
        for (long j = std::max(0L, j0 - 1); j <= std::min(res - 1, j0 + 1); ++j) {
            for (long i = std::max(0L, i0 - 1); i <= std::min(res - 1, i0 + 1); ++i) {
                int id = mark[j * res + i];
                if (id < 0 || seen.count(id)) continue;
                Scalar x0 = bb.xmin + w * Scalar(i, res);
                Scalar x1 = bb.xmin + w * Scalar(i + 1, res);
                Scalar y0 = bb.ymin + h * Scalar(j, res);
                Scalar y1 = bb.ymin + h * Scalar(j + 1, res);
                if (x0 <= pv.x && pv.x <= x1 && y0 <= pv.y && pv.y <= y1) {
                    out.components[id].vertices.push_back(v);
                    seen.insert(id);
                }
            }
        }
    }
    out.label = std::move(mark);
    return out;
}

}  // namespace kshadow
