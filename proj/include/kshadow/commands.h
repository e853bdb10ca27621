#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace kshadow {

// Command implementations behind the command-line tool, callable in-process
// for testing. Each prints its document to `out`, complaints to `err`, and
// returns the process exit code: 0 ok, 1 verification found mismatches,
// 2 invalid input, 3 geometry failure, 4 no clearing walk exists.

struct VisibilityArgs {
    std::string file;
    int k = 0;
    std::string point;     // "x,y" with exact coordinate syntax
    std::string svg_path;  // empty: no SVG artifact
};
int run_visibility(const VisibilityArgs& args, std::ostream& out, std::ostream& err);

struct DecomposeArgs {
    std::string file;
    int k = 0;
    std::string svg_path;
    std::string json_path;  // full document; stdout gets the stats record
};
int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::string file;  // exactly one of file / dir
    std::string dir;   // every *.json polygon in the directory, sorted
    int k = 0;
    int samples_per_cell = 32;
    uint64_t seed = 0;
};
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct PlanArgs {
    std::string file;
    int k = 0;
    std::optional<int> start;
    std::string svg_path;
};
int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
    std::string n_range;  // "4..12" or "7"
    std::string k_range;  // even levels in the range are run, odd skipped
    int count = 20;       // polygons per (n, k)
    uint64_t seed = 0;
};
int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace kshadow
