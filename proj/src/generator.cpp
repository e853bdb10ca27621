#include "kshadow/generator.h"

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kshadow/geometry.h"

namespace kshadow {

namespace {

uint64_t pick(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

// Path from a (inclusive) to b (exclusive) through every point of body.
// A random line through a pivot and an interior point of segment ab splits
// the remaining points into an a-side and a b-side group; the recursive
// chains then stay in disjoint regions. Returns false when a split line
// keeps hitting one of the points.
bool chain(std::mt19937_64& rng, const Point2& a, const Point2& b, std::vector<Point2> body,
           std::vector<Point2>& out) {
    if (body.empty()) {
        out.push_back(a);
        return true;
    }
    Point2 pivot = body[pick(rng, body.size())];
    for (int attempt = 0; attempt < 64; ++attempt) {
        Scalar t(1 + static_cast<long>(pick(rng, 63)), 64);
        Point2 q{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        int side_a = orientation_sign(pivot, q, a);
        if (side_a == 0) continue;  // pivot landed on line ab; impossible for split inputs
        std::vector<Point2> toward_a, toward_b;
        bool degenerate = false;
        for (const Point2& p : body) {
            if (p == pivot) continue;
            int s = orientation_sign(pivot, q, p);
            if (s == 0) {
                degenerate = true;
                break;
            }
            (s == side_a ? toward_a : toward_b).push_back(p);
        }
        if (degenerate) continue;
        return chain(rng, a, pivot, std::move(toward_a), out) &&
               chain(rng, pivot, b, std::move(toward_b), out);
    }
    return false;
}

}  // namespace

SimplePolygon random_polygon(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    long grid = 4L * n;

    for (int attempt = 0; attempt < 512; ++attempt) {
        std::set<std::pair<long, long>> used;
        while (used.size() < static_cast<size_t>(n))
            used.insert({static_cast<long>(pick(rng, grid + 1)),
                         static_cast<long>(pick(rng, grid + 1))});
        std::vector<Point2> pts;
        for (const auto& [x, y] : used) pts.push_back(Point2{Scalar(x), Scalar(y)});

        // Lexicographic extremes; the set order above already sorts them.
        Point2 lo = pts.front(), hi = pts.back();
        std::vector<Point2> left, right;
        bool split_ok = true;
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            int s = orientation_sign(lo, hi, pts[i]);
            if (s == 0) {
                split_ok = false;
                break;
            }
            (s > 0 ? left : right).push_back(pts[i]);
        }
        if (!split_ok) continue;

        std::vector<Point2> cycle;
        if (!chain(rng, lo, hi, std::move(left), cycle)) continue;
        if (!chain(rng, hi, lo, std::move(right), cycle)) continue;

        ValidationResult vr = validate_polygon(
            cycle, "rand-" + std::to_string(n) + "-" + std::to_string(seed));
        if (vr.ok()) return *vr.polygon;
    }
    throw std::runtime_error("random polygon generation exhausted its attempts");
}

}  // namespace kshadow
