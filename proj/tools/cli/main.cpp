// ifoi-bench: runs the benchmark cases with the finite-difference and
// iterative fractional order integration solvers and writes CSV/SVG output.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harness/csv.hpp"
#include "harness/harness.hpp"
#include "ifoi/error.hpp"

namespace {

using ifoi::harness::RunConfig;

void print_reports(const std::vector<ifoi::cases::SolveReport>& reports) {
    std::printf("%-6s %-5s %-5s %6s %4s %-10s %-12s %-12s %s\n", "case", "meth", "schm", "n", "m",
                "spacing", "error", "time_s", "status");
    for (const auto& r : reports) {
        char err[32] = "-";
        if (r.sup_error) std::snprintf(err, sizeof err, "%.4e", *r.sup_error);
        const bool is_ifoi = r.method == ifoi::cases::Method::ifoi;
        std::printf("%-6s %-5s %-5s %6zu %4s %-10s %-12s %-12.4e %s\n",
                    ifoi::cases::to_string(r.id).c_str(),
                    std::string(ifoi::cases::to_string(r.method)).c_str(),
                    is_ifoi ? std::string(ifoi::fracops::to_string(r.params.scheme)).c_str() : "-",
                    r.params.n, is_ifoi ? std::to_string(r.params.m).c_str() : "-",
                    is_ifoi ? std::string(ifoi::to_string(r.params.spacing)).c_str() : "-",
                    err, r.wall_time,
                    std::string(ifoi::cases::to_string(r.status)).c_str());
        if (!r.message.empty()) {
            std::printf("       note: %s\n", r.message.c_str());
        }
    }
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) {
            throw ifoi::DomainError("bad entry in --n-list: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark harness for fractional-order integration BVP solvers"};
    app.set_config("--config", "", "Optional key=value configuration file; flags override it");
    app.require_subcommand(1);

    std::string case_text;
    std::string method_text = "both";
    std::size_t n = 0;
    std::size_t m = 0;
    std::string spacing_text;
    std::string scheme_text;
    int repeats = 1;
    bool trace = false;
    std::string out_dir;
    int corrector_passes = 1;
    double memory_window = 0.0;
    int picard_max = 200;
    std::string n_list;
    ifoi::cases::Case3Constants case3;

    app.add_option("--case", case_text, "Case id: 1, 2, 3 or 4");
    app.add_option("--method", method_text, "fdm, ifoi or both")
        ->check(CLI::IsMember({"fdm", "ifoi", "both"}));
    app.add_option("--n", n, "Number of grid intervals on [0, 1]");
    app.add_option("--m", m, "Number of alpha stages");
    app.add_option("--alpha-spacing", spacing_text, "regular or quadratic")
        ->check(CLI::IsMember({"regular", "quadratic"}));
    app.add_option("--scheme", scheme_text, "gl, rect or abm")
        ->check(CLI::IsMember({"gl", "rect", "abm"}));
    app.add_option("--repeats", repeats, "Timing repeats (median is reported)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--trace", trace, "Write stage-evolution and comparison SVG plots");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--corrector-passes", corrector_passes,
                   "ABM corrector sweeps per node (1 = PECE)")
        ->check(CLI::PositiveNumber);
    app.add_option("--memory-window", memory_window,
                   "Short-memory window length for the GL scheme");
    app.add_option("--picard-max", picard_max, "Picard iteration cap for u-dependent cases")
        ->check(CLI::PositiveNumber);
    app.add_option("--n-list", n_list, "Comma-separated resolutions for sweep");
    app.add_option("--a3", case3.a, "Case 3 left Dirichlet value");
    app.add_option("--b3", case3.b, "Case 3 Robin weight");
    app.add_option("--c3", case3.c, "Case 3 Robin right-hand value");

    auto* run_cmd = app.add_subcommand("run", "Solve one case with one or both methods");
    auto* table_cmd = app.add_subcommand("table1", "Case 3 at N = 40, 80, 200 with both methods");
    auto* sweep_cmd = app.add_subcommand("sweep", "One case over a list of resolutions");
    for (auto* sub : {run_cmd, table_cmd, sweep_cmd}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig config;
        config.method = ifoi::harness::parse_method(method_text);
        if (n != 0) config.n = n;
        if (m != 0) config.m = m;
        if (!spacing_text.empty()) config.spacing = ifoi::parse_spacing(spacing_text);
        if (!scheme_text.empty()) config.scheme = ifoi::fracops::parse_scheme(scheme_text);
        if (app.count("--memory-window") > 0) config.memory_window = memory_window;
        config.repeats = repeats;
        config.corrector_passes = corrector_passes;
        config.picard_max_iterations = picard_max;
        config.output_dir = out_dir;
        config.emit_trace = trace;
        config.case3 = case3;

        if (*table_cmd) {
            print_reports(ifoi::harness::table1(out_dir, repeats, case3));
            return 0;
        }
        if (case_text.empty()) {
            std::cerr << "--case is required\n";
            return 2;
        }
        config.case_id = ifoi::cases::parse_case_id(case_text);
        if (*sweep_cmd) {
            const auto list = parse_list(n_list);
            if (list.empty()) {
                std::cerr << "--n-list is required for sweep\n";
                return 2;
            }
            print_reports(ifoi::harness::sweep(config, list));
            return 0;
        }
        const auto result = ifoi::harness::run(config);
        print_reports(result.reports);
        for (const auto& path : result.written) {
            std::printf("wrote %s\n", path.string().c_str());
        }
        return 0;
    } catch (const ifoi::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
