#pragma once

#include <stdexcept>

namespace kshadow {

/// k was negative, or odd where an even level is required.
struct InvalidK : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A region source point lies strictly outside the polygon.
struct SourceOutside : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A query point lies strictly outside the polygon.
struct PointOutside : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A planner transition was requested between non-adjacent cells.
struct NotAdjacent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Replay of a plan diverged from the transition-level bookkeeping.
struct ReplayMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive clearing search finished without reaching an all-clear state.
struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kshadow
