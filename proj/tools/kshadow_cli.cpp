#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kshadow/commands.h"

int main(int argc, char** argv) {
    CLI::App app{"k-visibility regions, cell decompositions, and clearing plans"};
    app.require_subcommand(1);

    kshadow::VisibilityArgs vis;
    CLI::App* c_vis = app.add_subcommand("visibility", "region and shadows seen from a point");
    c_vis->add_option("file", vis.file, "polygon JSON file")->required();
    c_vis->add_option("--k", vis.k, "visibility level (even)")->required();
    c_vis->add_option("--point", vis.point, "observer as x,y (exact syntax)")->required();
    c_vis->add_option("--svg", vis.svg_path, "write an SVG rendering here");

    kshadow::DecomposeArgs dec;
    CLI::App* c_dec = app.add_subcommand("decompose", "cell decomposition and stats");
    c_dec->add_option("file", dec.file, "polygon JSON file")->required();
    c_dec->add_option("--k", dec.k, "visibility level (even)")->required();
    c_dec->add_option("--svg", dec.svg_path, "write an SVG rendering here");
    c_dec->add_option("--json", dec.json_path, "write the full JSON document here");

    kshadow::VerifyArgs ver;
    CLI::App* c_ver = app.add_subcommand("verify", "check signature constancy inside every cell");
    c_ver->add_option("file", ver.file, "polygon JSON file");
    c_ver->add_option("--dir", ver.dir, "verify every .json polygon in this directory");
    c_ver->add_option("--k", ver.k, "visibility level (even)")->required();
    c_ver->add_option("--samples", ver.samples_per_cell, "interior samples per cell");
    c_ver->add_option("--seed", ver.seed, "sampling seed");

    kshadow::PlanArgs plan;
    CLI::App* c_plan = app.add_subcommand("plan", "single-pursuer clearing walk");
    c_plan->add_option("file", plan.file, "polygon JSON file")->required();
    c_plan->add_option("--k", plan.k, "visibility level (even)")->required();
    c_plan->add_option("--start", plan.start, "start cell id (default: best over all cells)");
    c_plan->add_option("--svg", plan.svg_path, "write a step-by-step SVG storyboard here");

    kshadow::BenchArgs bench;
    std::vector<std::string> gen_args;
    CLI::App* c_bench = app.add_subcommand("bench", "decomposition size and time over random polygons");
    c_bench->add_option("--gen", gen_args, "n_range k_range count, e.g. --gen 4..12 0..4 20")
        ->expected(3)
        ->required();
    c_bench->add_option("--seed", bench.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (c_bench->parsed()) {
        bench.n_range = gen_args[0];
        bench.k_range = gen_args[1];
        try {
            bench.count = std::stoi(gen_args[2]);
        } catch (const std::exception&) {
            std::cerr << "bench count must be an integer, got \"" << gen_args[2] << "\"\n";
            return 2;
        }
    }

    if (c_vis->parsed()) return kshadow::run_visibility(vis, std::cout, std::cerr);
    if (c_dec->parsed()) return kshadow::run_decompose(dec, std::cout, std::cerr);
    if (c_ver->parsed()) return kshadow::run_verify(ver, std::cout, std::cerr);
    if (c_plan->parsed()) return kshadow::run_plan(plan, std::cout, std::cerr);
    if (c_bench->parsed()) return kshadow::run_bench(bench, std::cout, std::cerr);
    return 2;
}
