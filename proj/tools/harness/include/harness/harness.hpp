#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "ifoi/cases.hpp"
#include "ifoi/solver.hpp"

namespace ifoi::harness {

enum class MethodSelection { fdm, ifoi, both };

MethodSelection parse_method(std::string_view text);

/// One benchmark invocation. Unset alpha fields fall back to the case defaults.
struct RunConfig {
    cases::CaseId case_id = cases::CaseId::case1;
    MethodSelection method = MethodSelection::both;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<Spacing> spacing;
    std::optional<fracops::Scheme> scheme;
    int corrector_passes = 1;
    std::optional<double> memory_window;
    int picard_max_iterations = 200;
    int repeats = 1;
    std::filesystem::path output_dir;
    bool emit_trace = false;
    cases::Case3Constants case3;
};

struct RunResult {
    std::vector<cases::SolveReport> reports;
    /// Stage curves of the particular IVP solution, when an IFOI run converged.
    std::optional<IfoiTrace> trace;
    std::vector<std::filesystem::path> written;
};

/// Runs the requested solves. Solver divergence and singular shooting become
/// report statuses; only invalid configuration and I/O problems throw.
/// When output_dir is set, writes <case>_run.csv and, with emit_trace, the plots.
RunResult run(const RunConfig& config);

/// Case 3 at N = 40, 80, 200 with both methods; writes table1.csv when
/// output_dir is non-empty.
std::vector<cases::SolveReport> table1(const std::filesystem::path& output_dir, int repeats = 1,
                                       const cases::Case3Constants& case3 = {});

/// `base` repeated over every resolution in `n_list`; writes <case>_sweep.csv.
std::vector<cases::SolveReport> sweep(const RunConfig& base, const std::vector<std::size_t>& n_list);

/// Writes <case>_evolution.svg (needs a trace) and <case>_comparison.svg.
std::vector<std::filesystem::path> plot(const std::vector<cases::SolveReport>& reports,
                                        const std::optional<IfoiTrace>& trace,
                                        const std::filesystem::path& output_dir,
                                        const cases::Case3Constants& case3 = {});

std::string render_evolution(const cases::SolveReport& ifoi_report, const IfoiTrace& trace);
std::string render_comparison(const std::vector<cases::SolveReport>& reports,
                              const cases::CaseSpec& spec);

}  // namespace ifoi::harness
