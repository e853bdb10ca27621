#pragma once

#include <cstdint>
#include <vector>

#include "kshadow/decomposition.h"

namespace kshadow {

enum class ShadowKind { VertexShadow, EdgeShadow };

// Polygon feature ids: vertex i -> 2*i, edge i -> 2*i + 1. A vertex is a
// feature of a shadow when it lies on the shadow's closure; an edge when a
// positive-length piece of it lies on the shadow's boundary.
inline int vertex_feature(int i) { return 2 * i; }
inline int edge_feature(int i) { return 2 * i + 1; }
inline bool is_vertex_feature(int id) { return id % 2 == 0; }
inline int feature_index(int id) { return id / 2; }

struct Shadow {
    std::vector<RegionFace> faces;  // tagged cycles tiling the shadow
    ShadowKind kind;
    std::vector<int> features;  // sorted feature ids
    Scalar area;
};

/// Maximal connected components of the k-invisible part of the polygon seen
/// from p, connected across shared edges of positive length. Deterministic
/// order. Throws InvalidK (odd or negative) or PointOutside (p not strictly
/// inside).
std::vector<Shadow> shadows_of(const SimplePolygon& P, const Point2& p, int k);

/// VertexShadow iff any vertex feature is present.
ShadowKind classify_shadow(const Shadow& s);

struct ShadowSignature {
    Point2 observer;  // informational; not part of equality
    std::vector<std::pair<ShadowKind, std::vector<int>>> shadows;  // canonically sorted

    friend bool operator==(const ShadowSignature& a, const ShadowSignature& b) {
        return a.shadows == b.shadows;
    }
    friend bool operator!=(const ShadowSignature& a, const ShadowSignature& b) {
        return !(a == b);
    }
    /// True when two shadows share an identical (kind, features) entry.
    bool has_duplicates() const;
};

ShadowSignature shadow_signature(const SimplePolygon& P, const Point2& p, int k);

struct ShadowEvent {
    enum class Type { Appear, Disappear, Merge, Split };
    Type type;
    std::vector<int> old_indices;  // into the old signature's shadows
    std::vector<int> new_indices;  // into the new signature's shadows
};

struct SignatureDiff {
    std::vector<ShadowEvent> events;
    // Link components as (old shadow indices, new shadow indices); every
    // shadow of either signature appears in exactly one group. One-to-one
    // groups carry no event; contamination tracking propagates along them.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    bool ambiguous = false;  // an overlap tie or compound component was reported, not guessed
};

/// Matches shadows across signatures by maximal feature overlap. Every old
/// shadow links to its best-overlapping new shadow and vice versa; link
/// components give the events: isolated old -> Disappear, isolated new ->
/// Appear, many-to-one -> Merge, one-to-many -> Split, one-to-one -> no
/// event (feature drift allowed). Overlap ties and many-to-many components
/// set ambiguous instead of guessing.
SignatureDiff diff_signatures(const ShadowSignature& before, const ShadowSignature& after);

struct InvarianceCellReport {
    int cell = -1;
    int samples = 0;  // signatures computed for this cell
    bool pass = true;
    bool duplicate_features = false;  // some signature repeats a (kind, features) entry
    Point2 witness_a, witness_b;      // differing sample pair when pass is false
};

struct InvarianceReport {
    bool all_pass = true;
    int cells_checked = 0;
    int signatures_compared = 0;
    std::vector<InvarianceCellReport> cells;
};

/// Samples every cell with samples_per_cell interior points (rejection
/// sampling, deterministic from seed) plus a point just inside each corner,
/// and checks that all signatures in a cell are identical. Violations are
/// reported, never thrown.
InvarianceReport verify_cell_invariance(const CellDecomposition& D, int samples_per_cell,
                                        uint64_t seed);

struct GridComponent {
    int cells = 0;
    std::vector<int> vertices;  // polygon vertex ids falling in this component
};

struct GridShadows {
    int resolution = 0;
    std::vector<GridComponent> components;  // in raster discovery order
    std::vector<int> label;  // res*res row-major: component id, -1 outside or visible
};

/// Raster oracle: marks grid cell centers inside P by oracle_is_k_visible
/// and flood-fills invisible 4-connected components. A vertex falls in a
/// component when some component cell's closed square contains it.
GridShadows oracle_shadows_grid(const SimplePolygon& P, const Point2& p, int k, int resolution);

}  // namespace kshadow
