#pragma once

#include <string>
#include <vector>

#include "kshadow/decomposition.h"
#include "kshadow/planner.h"
#include "kshadow/shadows.h"

namespace kshadow {

/// Polygon file: {"vertices": [[x, y], ...]} with optional "name". Each
/// coordinate is a JSON integer or a string "p", "p/q", or "d.dd"; decimal
/// strings convert exactly. Bare JSON floats are rejected — a binary double
/// cannot hold most decimals, so exact input has to be quoted.
/// Throws std::invalid_argument naming the problem.
SimplePolygon polygon_from_json(const std::string& text);

/// Inverse of polygon_from_json; integers become JSON numbers, everything
/// else a "p/q" string. parse(serialize(P)) reproduces P exactly.
std::string polygon_to_json(const SimplePolygon& P);

/// Reads and parses a polygon file. Throws std::invalid_argument (unreadable
/// file or bad content).
SimplePolygon load_polygon_file(const std::string& path);

/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

// JSON documents below use sorted keys, two-space indent, and a trailing
// newline, so identical inputs serialize to identical bytes.

/// Visibility region plus its complementary shadows.
std::string region_to_json(const VisibilityRegion& R, const std::vector<Shadow>& shadows);

/// Decomposition stats, partition segments, and per-cell areas.
std::string decomposition_to_json(const CellDecomposition& D);

/// Cell-invariance verification report; failing cells carry witness points.
std::string invariance_to_json(const CellDecomposition& D, const InvarianceReport& report,
                               int samples_per_cell, uint64_t seed);

/// Clearing plan with per-step events and contamination from its replay.
std::string plan_to_json(const CellDecomposition& D, const Plan& plan,
                         const ReplayReport& replay);

// SVG twins. Display only: coordinates rendered with 6 decimal digits and y
// flipped to screen orientation; exact values live in the JSON documents.

/// Region faces shaded, windows dashed, shadows dark, boundary bold.
std::string region_to_svg(const SimplePolygon& P, const VisibilityRegion& R,
                          const std::vector<Shadow>& shadows);

/// Cells distinctly filled, partition segments stroked, boundary bold.
std::string decomposition_to_svg(const CellDecomposition& D);

/// One frame per plan step; shadows still contaminated after the step are
/// hatched, cleared ones shaded, the pursuer's waypoint dotted.
std::string plan_to_svg(const CellDecomposition& D, const Plan& plan,
                        const ReplayReport& replay);

/// One row of the benchmark table; the header names the columns.
std::string bench_csv_header();
std::string bench_csv_row(const DecompositionStats& stats, long wall_ms);

}  // namespace kshadow
