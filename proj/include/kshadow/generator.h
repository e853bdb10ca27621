#pragma once

#include <cstdint>

#include "kshadow/polygon.h"

namespace kshadow {

/// Deterministic random simple polygon: n distinct vertices on the integer
/// grid [0, 4n]^2, threaded into a simple cycle by recursive space
/// partitioning and validated. The same (n, seed) always yields the same
/// polygon; n must be at least 3.
SimplePolygon random_polygon(int n, uint64_t seed);

}  // namespace kshadow
