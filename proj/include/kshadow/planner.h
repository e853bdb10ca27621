#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kshadow/decomposition.h"
#include "kshadow/shadows.h"

namespace kshadow {

/// Pursuer state: current cell plus one contamination bit per shadow slot of
/// the cell's signature, in canonical signature order. A set bit means that
/// shadow may still hide an undetected intruder.
struct SearchState {
    int cell = -1;
    uint64_t contaminated = 0;
};

/// A clearing walk: consecutive cells are adjacent, and following the walk
/// from an all-contaminated start leaves every shadow clear at the end.
struct Plan {
    std::vector<int> cells;
    std::vector<Point2> waypoints;  // deterministic interior point per cell
};

/// Centroid of the cell's outer cycle when that lands strictly inside the
/// cell, otherwise the cell's stored representative point.
Point2 cell_waypoint(const CellDecomposition& D, int cell);

/// Shadow signature observed from the cell's waypoint (constant over the
/// whole cell).
ShadowSignature cell_signature(const CellDecomposition& D, int cell);

/// Moves the pursuer to an adjacent cell and propagates contamination along
/// the signature diff: a disappearing shadow drops its bit, an appearing one
/// starts clear, merges OR the bits, splits copy them, and ambiguous
/// components take the OR of everything linked. Throws NotAdjacent.
SearchState apply_transition(const CellDecomposition& D, const SearchState& from, int to_cell);

/// Breadth-first search over (cell, contamination) states from an
/// all-contaminated start until some state is fully clear. Without a start
/// cell every cell is tried in id order and the shortest walk wins, earlier
/// start breaking ties. Throws NoSolution when the reachable state space has
/// no clear state, std::out_of_range for a bad start cell.
Plan plan_clearing_path(const CellDecomposition& D, std::optional<int> start = std::nullopt);

struct ReplayStep {
    int from_cell = -1;
    int to_cell = -1;
    std::vector<ShadowEvent> events;
    bool ambiguous = false;
    uint64_t contaminated = 0;  // after the step
};

struct ReplayReport {
    bool pass = false;
    uint64_t final_contamination = 0;
    std::vector<ReplayStep> steps;
};

/// Re-simulates a plan with signatures recomputed from scratch at sample
/// points independent of the planner's waypoints, and checks that
/// apply_transition agrees step by step (ReplayMismatch otherwise; a
/// truncated plan is reported as pass = false, not thrown). Throws
/// NotAdjacent for non-adjacent consecutive cells.
ReplayReport replay_plan(const CellDecomposition& D, const Plan& plan);

}  // namespace kshadow
