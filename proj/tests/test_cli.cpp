#include "doctest.h"
#include "kshadow/commands.h"
#include "kshadow/io.h"

#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using namespace kshadow;
namespace fs = std::filesystem;

namespace {

Point2 pt(long x, long y) { return Point2{Scalar(x), Scalar(y)}; }

// Fresh scratch directory with the polygon fixtures, removed on destruction.
struct Workspace {
    fs::path dir;

    Workspace() {
        dir = fs::temp_directory_path() / ("kshadow-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        put("square.json", R"({"name": "square", "vertices": [[0,0],[4,0],[4,4],[0,4]]})");
        put("L.json",
            R"({"name": "L", "vertices": [[0,0],[4,0],[4,2],[2,2],[2,4],[0,4]]})");
        std::vector<Point2> v{pt(0, 0), pt(15, 0), pt(15, 2)};
        for (long x0 : {11, 6, 1}) {
            v.push_back(pt(x0 + 1, 2));
            v.push_back(pt(x0 + 1, 4));
            v.push_back(pt(x0 + 2, 4));
            v.push_back(pt(x0 + 2, 3));
            v.push_back(pt(x0 + 3, 3));
            v.push_back(pt(x0 + 3, 5));
            v.push_back(pt(x0, 5));
            v.push_back(pt(x0, 2));
        }
        v.push_back(pt(0, 2));
        put("comb.json", polygon_to_json(SimplePolygon{v, "deep-comb"}));
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string put(const std::string& name, const std::string& content) {
        std::ofstream out(dir / name, std::ios::binary);
        out << content;
        return (dir / name).string();
    }
    std::string at(const std::string& name) const { return (dir / name).string(); }
};

struct Run {
    int rc;
    std::string out, err;
};

template <typename Args, typename Fn>
Run run(Fn fn, const Args& args) {
    std::ostringstream out, err;
    int rc = fn(args, out, err);
    return Run{rc, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// CSV minus the wall-clock column, which legitimately varies run to run.
std::string drop_wall(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, kept;
    while (std::getline(in, line)) {
        size_t cut = line.rfind(',');
        kept += line.substr(0, cut) + "\n";
    }
    return kept;
}

}  // namespace

TEST_CASE("visibility reports the region and shadow summary") {
    Workspace ws;
    Run whole = run(run_visibility, VisibilityArgs{ws.at("square.json"), 0, "1,1", ""});
    CHECK(whole.rc == 0);
    CHECK(has(whole.out, "\"area\": 16"));
    CHECK(has(whole.out, "\"count\": 0"));
    CHECK(has(whole.out, "\"windows\": []"));

    Run arm = run(run_visibility, VisibilityArgs{ws.at("L.json"), 0, "3,1", ""});
    CHECK(arm.rc == 0);
    CHECK(has(arm.out, "\"count\": 1"));
    CHECK(has(arm.out, "\"kind\": \"vertex\""));

    std::string svg = ws.at("region.svg");
    Run art = run(run_visibility, VisibilityArgs{ws.at("L.json"), 0, "3,1", svg});
    CHECK(art.rc == 0);
    CHECK(fs::exists(svg));
}

TEST_CASE("visibility rejects bad input with exit 2") {
    Workspace ws;
    CHECK(run(run_visibility, VisibilityArgs{ws.at("L.json"), 1, "3,1", ""}).rc == 2);
    CHECK(run(run_visibility, VisibilityArgs{ws.at("nope.json"), 0, "3,1", ""}).rc == 2);
    CHECK(run(run_visibility, VisibilityArgs{ws.at("L.json"), 0, "3;1", ""}).rc == 2);
    CHECK(run(run_visibility, VisibilityArgs{ws.at("L.json"), 0, "9,9", ""}).rc == 2);

    std::string floaty =
        ws.put("floaty.json", R"({"vertices": [[0,0],[4,0],[2.5,3]]})");
    Run r = run(run_visibility, VisibilityArgs{floaty, 0, "1,1", ""});
    CHECK(r.rc == 2);
    CHECK(has(r.err, "must be strings"));
}

TEST_CASE("decompose prints stats and writes artifacts") {
    Workspace ws;
    Run sq = run(run_decompose, DecomposeArgs{ws.at("square.json"), 0, "", ""});
    CHECK(sq.rc == 0);
    CHECK(has(sq.out, "\"cell_count\": 1"));

    std::string svg = ws.at("cells.svg"), jsn = ws.at("cells.json");
    Run l = run(run_decompose, DecomposeArgs{ws.at("L.json"), 0, svg, jsn});
    CHECK(l.rc == 0);
    CHECK(has(l.out, "\"cell_count\": 5"));
    CHECK(has(l.out, "\"segment_count\": 4"));
    REQUIRE(fs::exists(jsn));
    std::ifstream in(jsn);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(has(buf.str(), "\"cell_count\": 5"));
    CHECK(fs::exists(svg));
}

TEST_CASE("verify passes clean polygons and demands one input source") {
    Workspace ws;
    Run one = run(run_verify, VerifyArgs{ws.at("square.json"), "", 0, 8, 11});
    CHECK(one.rc == 0);
    CHECK(has(one.out, "\"all_pass\": true"));

    Run neither = run(run_verify, VerifyArgs{"", "", 0, 8, 11});
    CHECK(neither.rc == 2);
    Run both = run(run_verify, VerifyArgs{ws.at("square.json"), ws.dir.string(), 0, 8, 11});
    CHECK(both.rc == 2);
}

TEST_CASE("verify aggregates a directory into one table") {
    Workspace ws;
    fs::path corpus = ws.dir / "corpus";
    fs::create_directories(corpus);
    fs::copy_file(ws.at("square.json"), corpus / "square.json");
    fs::copy_file(ws.at("L.json"), corpus / "L.json");
    Run r = run(run_verify, VerifyArgs{"", corpus.string(), 0, 8, 11});
    CHECK(r.rc == 0);
    CHECK(has(r.out, "\"all_pass\": true"));
    CHECK(has(r.out, "L.json"));
    CHECK(has(r.out, "square.json"));
    // sorted by filename, so L comes first
    CHECK(r.out.find("L.json") < r.out.find("square.json"));

    Run empty = run(run_verify, VerifyArgs{"", (ws.dir / "nothing").string(), 0, 8, 11});
    CHECK(empty.rc != 0);
}

TEST_CASE("plan emits a replayable walk or reports no solution") {
    Workspace ws;
    std::string svg = ws.at("story.svg");
    Run l = run(run_plan, PlanArgs{ws.at("L.json"), 0, std::nullopt, svg});
    CHECK(l.rc == 0);
    CHECK(has(l.out, "\"pass\": true"));
    CHECK(has(l.out, "\"final_contamination\": 0"));
    CHECK(fs::exists(svg));

    Run comb = run(run_plan, PlanArgs{ws.at("comb.json"), 0, std::nullopt, ""});
    CHECK(comb.rc == 4);
    CHECK(has(comb.err, "no clearing walk"));

    Run bad_start = run(run_plan, PlanArgs{ws.at("L.json"), 0, 99, ""});
    CHECK(bad_start.rc == 2);
}

#ifdef KSHADOW_CLI_PATH
TEST_CASE("the installed binary wires flags to the same commands") {
    Workspace ws;
    std::string cli = KSHADOW_CLI_PATH;
    auto shell = [](const std::string& cmd) {
        int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    CHECK(shell(cli + " decompose " + ws.at("L.json") + " --k 0 > /dev/null 2>&1") == 0);
    CHECK(shell(cli + " visibility " + ws.at("L.json") + " --k 1 --point 3,1 > /dev/null 2>&1") ==
          2);
    CHECK(shell(cli + " plan " + ws.at("L.json") + " --k 0 --start 0 > /dev/null 2>&1") == 0);
    CHECK(shell(cli + " bench --gen 4 0 1 --seed 5 > /dev/null 2>&1") == 0);
    CHECK(shell(cli + " --help > /dev/null 2>&1") == 0);
    CHECK(shell(cli + " decompose > /dev/null 2>&1") == 2);  // missing required flags
    CHECK(shell(cli + " nonsense > /dev/null 2>&1") == 2);
}
#endif

TEST_CASE("bench is deterministic modulo wall time") {
    Run a = run(run_bench, BenchArgs{"4..5", "0..2", 2, 77});
    Run b = run(run_bench, BenchArgs{"4..5", "0..2", 2, 77});
    CHECK(a.rc == 0);
    REQUIRE(has(a.out, "n,k,segments,vertices,cells,wall_ms"));
    CHECK(drop_wall(a.out) == drop_wall(b.out));
    // 2 sizes x 2 even levels x 2 polygons + header
    int rows = 0;
    for (char c : a.out)
        if (c == '\n') ++rows;
    CHECK(rows == 1 + 2 * 2 * 2);

    CHECK(run(run_bench, BenchArgs{"2..3", "0", 2, 1}).rc == 2);   // n too small
    CHECK(run(run_bench, BenchArgs{"4", "0", 0, 1}).rc == 2);      // empty count
    CHECK(run(run_bench, BenchArgs{"4-6", "0", 2, 1}).rc == 2);    // bad range syntax
    CHECK(run(run_bench, BenchArgs{"6..4", "0", 2, 1}).rc == 2);   // reversed range
}
