#include "kshadow/commands.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "kshadow/errors.h"
#include "kshadow/generator.h"
#include "kshadow/io.h"

namespace kshadow {

namespace {

using nlohmann::json;

// Exit-code policy: bad input (files, flags, points, k) is 2; geometric or
// internal failures are 3; an unclearable polygon is 4.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const NoSolution& e) {
        err << e.what() << "\n";
        return 4;
    } catch (const InvalidK& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const SourceOutside& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const PointOutside& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 3;
    }
}

Point2 parse_point(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("point must be \"x,y\", got \"" + text + "\"");
    auto x = Scalar::parse(text.substr(0, comma));
    auto y = Scalar::parse(text.substr(comma + 1));
    if (!x || !y)
        throw std::invalid_argument("cannot parse point coordinates in \"" + text + "\"");
    return Point2{*x, *y};
}

json stats_record(const CellDecomposition& D) {
    DecompositionStats st = decomposition_stats(D);
    return json{{"name", D.polygon.name}, {"n", st.n},
                {"k", st.k},             {"segment_count", st.segment_count},
                {"vertex_count", st.vertex_count}, {"cell_count", st.cell_count}};
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
    auto bad = [&] {
        throw std::invalid_argument(std::string(what) + " range must be \"a..b\" or \"a\", got \"" +
                                    text + "\"");
    };
    auto whole_int = [&](const std::string& part) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            bad();
        }
        if (used != part.size() || part.empty()) bad();
        return v;
    };
    Range r;
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = whole_int(text);
    } else {
        r.lo = whole_int(text.substr(0, dots));
        r.hi = whole_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) bad();
    return r;
}

}  // namespace

int run_visibility(const VisibilityArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SimplePolygon P = load_polygon_file(args.file);
        Point2 p = parse_point(args.point);
        VisibilityRegion R = k_visibility_region(P, p, args.k);
        std::vector<Shadow> shadows = shadows_of(P, p, args.k);
        out << region_to_json(R, shadows);
        if (!args.svg_path.empty()) write_text_file(args.svg_path, region_to_svg(P, R, shadows));
        return 0;
    });
}

int run_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SimplePolygon P = load_polygon_file(args.file);
        CellDecomposition D = build_decomposition(P, args.k);
        out << stats_record(D).dump(2) << "\n";
        if (!args.json_path.empty()) write_text_file(args.json_path, decomposition_to_json(D));
        if (!args.svg_path.empty()) write_text_file(args.svg_path, decomposition_to_svg(D));
        return 0;
    });
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (args.file.empty() == args.dir.empty())
            throw std::invalid_argument("verify needs exactly one of a polygon file or --dir");
        if (!args.file.empty()) {
            SimplePolygon P = load_polygon_file(args.file);
            CellDecomposition D = build_decomposition(P, args.k);
            InvarianceReport rep = verify_cell_invariance(D, args.samples_per_cell, args.seed);
            out << invariance_to_json(D, rep, args.samples_per_cell, args.seed);
            return rep.all_pass ? 0 : 1;
        }
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(args.dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty())
            throw std::invalid_argument("no .json polygon files in " + args.dir);
        json table = json::array();
        bool all = true;
        for (const auto& path : files) {
            SimplePolygon P = load_polygon_file(path.string());
            CellDecomposition D = build_decomposition(P, args.k);
            InvarianceReport rep = verify_cell_invariance(D, args.samples_per_cell, args.seed);
            all = all && rep.all_pass;
            table.push_back(json{{"file", path.filename().string()},
                                 {"name", P.name},
                                 {"n", P.n()},
                                 {"cells", rep.cells_checked},
                                 {"signatures", rep.signatures_compared},
                                 {"pass", rep.all_pass}});
        }
        json doc{{"k", args.k},
                 {"samples_per_cell", args.samples_per_cell},
                 {"seed", args.seed},
                 {"all_pass", all},
                 {"files", table}};
        out << doc.dump(2) << "\n";
        return all ? 0 : 1;
    });
}

int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SimplePolygon P = load_polygon_file(args.file);
        CellDecomposition D = build_decomposition(P, args.k);
        Plan plan = plan_clearing_path(D, args.start);
        ReplayReport replay = replay_plan(D, plan);
        out << plan_to_json(D, plan, replay);
        if (!args.svg_path.empty()) write_text_file(args.svg_path, plan_to_svg(D, plan, replay));
        if (!replay.pass) {
            err << "replay of the computed plan left contamination\n";
            return 3;
        }
        return 0;
    });
}

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Range nr = parse_range(args.n_range, "n");
        Range kr = parse_range(args.k_range, "k");
        if (nr.lo < 3) throw std::invalid_argument("benchmark polygons need n >= 3");
        if (kr.lo < 0) throw std::invalid_argument("benchmark levels need k >= 0");
        if (args.count < 1) throw std::invalid_argument("benchmark count must be positive");
        out << bench_csv_header();
        for (int n = nr.lo; n <= nr.hi; ++n) {
            for (int k = kr.lo; k <= kr.hi; ++k) {
                if (k % 2 != 0) continue;
                for (int c = 0; c < args.count; ++c) {
                    uint64_t poly_seed =
                        args.seed ^ (static_cast<uint64_t>(n) << 32) ^ static_cast<uint64_t>(c);
                    SimplePolygon P = random_polygon(n, poly_seed);
                    auto t0 = std::chrono::steady_clock::now();
                    CellDecomposition D = build_decomposition(P, k);
                    auto t1 = std::chrono::steady_clock::now();
                    long ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                    out << bench_csv_row(decomposition_stats(D), ms);
                }
            }
        }
        return 0;
    });
}

}  // namespace kshadow
