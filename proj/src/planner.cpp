#include "kshadow/planner.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "kshadow/errors.h"
#include "kshadow/parallel.h"

namespace kshadow {

namespace {

#define KS_CHECK(cond)                                             \
    do {                                                           \
        if (!(cond)) throw std::runtime_error("planner invariant failed"); \
    } while (0)

uint64_t full_mask(size_t slots) {
    KS_CHECK(slots <= 64);
    if (slots == 0) return 0;
    if (slots == 64) return ~uint64_t{0};
    return (uint64_t{1} << slots) - 1;
}

// For each new shadow slot, the mask of old slots in its link group; a bit
// of the new state is set iff the old state intersects that mask.
std::vector<uint64_t> feed_masks(const SignatureDiff& diff, size_t new_slots) {
    std::vector<uint64_t> feeds(new_slots, 0);
    for (const auto& [olds, news] : diff.groups) {
        uint64_t m = 0;
        for (int i : olds) m |= uint64_t{1} << i;
        for (int j : news) feeds[j] = m;
    }
    return feeds;
}

uint64_t propagate(const std::vector<uint64_t>& feeds, uint64_t mask) {
    uint64_t out = 0;
    for (size_t j = 0; j < feeds.size(); ++j)
        if (mask & feeds[j]) out |= uint64_t{1} << j;
    return out;
}

// Per-decomposition search tables: cell signatures once, contamination
// propagation masks once per directed door.
struct TransitionTable {
    std::vector<ShadowSignature> sigs;
    std::map<int, std::vector<int>> neighbors;
    std::map<std::pair<int, int>, std::vector<uint64_t>> feeds;
};

TransitionTable build_table(const CellDecomposition& D) {
    TransitionTable t;
    int cells = static_cast<int>(D.arr.faces.size());
    t.sigs.resize(cells);
    for (int c = 0; c < cells; ++c) t.sigs[c] = cell_signature(D, c);
    for (const auto& [f, nbs] : cell_adjacency(D))
        for (const auto& [g, doors] : nbs) {
            t.neighbors[f].push_back(g);
            SignatureDiff d = diff_signatures(t.sigs[f], t.sigs[g]);
            t.feeds[{f, g}] = feed_masks(d, t.sigs[g].shadows.size());
        }
    return t;
}

using State = std::pair<int, uint64_t>;

std::optional<std::vector<int>> bfs_clear(const TransitionTable& t, int start) {
    State s0{start, full_mask(t.sigs[start].shadows.size())};
    std::map<State, State> parent;
    parent.emplace(s0, s0);
    std::deque<State> queue{s0};
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        if (s.second == 0) {
            std::vector<int> cells;
            for (State w = s;; w = parent.at(w)) {
                cells.push_back(w.first);
                if (parent.at(w) == w) break;
            }
            std::reverse(cells.begin(), cells.end());
            return cells;
        }
        auto it = t.neighbors.find(s.first);
        if (it == t.neighbors.end()) continue;
        for (int nb : it->second) {
            State ns{nb, propagate(t.feeds.at({s.first, nb}), s.second)};
            if (parent.emplace(ns, s).second) queue.push_back(ns);
        }
    }
    return std::nullopt;
}

}  // namespace

Point2 cell_waypoint(const CellDecomposition& D, int cell) {
    const Arrangement& arr = D.arr;
    KS_CHECK(cell >= 0 && cell < static_cast<int>(arr.faces.size()));
    const Arrangement::Face& face = arr.faces[cell];
    Scalar sx(0), sy(0);
    int corners = 0;
    for (int h : face.outer) {
        Point2 p = arr.half_segment(h).a;
        sx += p.x;
        sy += p.y;
        ++corners;
    }
    KS_CHECK(corners > 0);
    Point2 centroid{sx / Scalar(corners), sy / Scalar(corners)};
    Arrangement::Location loc = arr.locate(centroid);
    if (loc.kind == Arrangement::Location::Kind::InFace && loc.index == cell) return centroid;
    return face.rep;
}

ShadowSignature cell_signature(const CellDecomposition& D, int cell) {
    return shadow_signature(D.polygon, cell_waypoint(D, cell), D.k);
}

SearchState apply_transition(const CellDecomposition& D, const SearchState& from, int to_cell) {
    bool adjacent = false;
    auto adj = cell_adjacency(D);
    auto it = adj.find(from.cell);
    if (it != adj.end())
        for (const auto& [nb, doors] : it->second)
            if (nb == to_cell) adjacent = true;
    if (!adjacent)
        throw NotAdjacent("cells " + std::to_string(from.cell) + " and " +
                          std::to_string(to_cell) + " share no door");

    ShadowSignature before = cell_signature(D, from.cell);
    ShadowSignature after = cell_signature(D, to_cell);
    KS_CHECK((from.contaminated & ~full_mask(before.shadows.size())) == 0);
    SignatureDiff d = diff_signatures(before, after);
    return SearchState{to_cell,
                       propagate(feed_masks(d, after.shadows.size()), from.contaminated)};
}

Plan plan_clearing_path(const CellDecomposition& D, std::optional<int> start) {
    int cells = static_cast<int>(D.arr.faces.size());
    if (start && (*start < 0 || *start >= cells))
        throw std::out_of_range("start cell " + std::to_string(*start) + " of " +
                                std::to_string(cells));
    TransitionTable t = build_table(D);

    std::optional<std::vector<int>> best;
    for (int s = start ? *start : 0; s < (start ? *start + 1 : cells); ++s) {
        std::optional<std::vector<int>> path = bfs_clear(t, s);
        if (path && (!best || path->size() < best->size())) best = std::move(path);
    }
    if (!best)
        throw NoSolution("no clearing walk over " + std::to_string(cells) + " cells at k=" +
                         std::to_string(D.k));

    Plan plan;
    plan.cells = std::move(*best);
    for (int c : plan.cells) plan.waypoints.push_back(cell_waypoint(D, c));
    return plan;
}

ReplayReport replay_plan(const CellDecomposition& D, const Plan& plan) {
    const Arrangement& arr = D.arr;
    int n = static_cast<int>(plan.cells.size());
    if (n == 0 || static_cast<int>(plan.waypoints.size()) != n)
        throw ReplayMismatch("plan must carry one waypoint per cell");
    for (int i = 0; i < n; ++i) {
        Arrangement::Location loc = arr.locate(plan.waypoints[i]);
        if (loc.kind != Arrangement::Location::Kind::InFace || loc.index != plan.cells[i])
            throw ReplayMismatch("waypoint " + std::to_string(i) +
                                 " is not interior to its cell");
    }
    auto adj = cell_adjacency(D);
    for (int i = 0; i + 1 < n; ++i) {
        bool ok = false;
        auto it = adj.find(plan.cells[i]);
        if (it != adj.end())
            for (const auto& [nb, doors] : it->second)
                if (nb == plan.cells[i + 1]) ok = true;
        if (!ok)
            throw NotAdjacent("plan step " + std::to_string(i) + " crosses no door");
    }

    // Signatures recomputed from scratch at the cells' stored representative
    // points, which differ from the centroid waypoints whenever those are
    // interior; agreement with apply_transition then also exercises the
    // within-cell invariance the transitions rely on.
    std::vector<ShadowSignature> sigs(n);
    parallel_for(n, [&](int i) {
        sigs[i] = shadow_signature(D.polygon, arr.faces[plan.cells[i]].rep, D.k);
    });
    ShadowSignature at_start = shadow_signature(D.polygon, plan.waypoints[0], D.k);
    if (at_start.shadows.size() != sigs[0].shadows.size())
        throw ReplayMismatch("shadow count diverges at the start cell");

    ReplayReport report;
    uint64_t mask = full_mask(sigs[0].shadows.size());
    SearchState state{plan.cells[0], mask};
    for (int i = 0; i + 1 < n; ++i) {
        SignatureDiff d = diff_signatures(sigs[i], sigs[i + 1]);
        mask = propagate(feed_masks(d, sigs[i + 1].shadows.size()), mask);
        state = apply_transition(D, state, plan.cells[i + 1]);
        if (state.contaminated != mask)
            throw ReplayMismatch("contamination diverges after step " + std::to_string(i + 1));
        report.steps.push_back({plan.cells[i], plan.cells[i + 1], d.events, d.ambiguous, mask});
    }
    report.final_contamination = mask;
    report.pass = mask == 0;
    return report;
}

}  // namespace kshadow
