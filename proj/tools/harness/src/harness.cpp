#include "harness/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "harness/csv.hpp"
#include "harness/svg_plot.hpp"
#include "ifoi/error.hpp"
#include "ifoi/fdm.hpp"
#include "ifoi/shooting.hpp"

namespace ifoi::harness {

namespace {

using cases::Method;
using cases::SolveReport;
using cases::Status;
using Clock = std::chrono::steady_clock;

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

struct Attempt {
    Status status = Status::converged;
    std::optional<GridFunction> solution;
    std::string message;
};

template <typename Solve>
Attempt attempt(Solve&& solve) {
    try {
        return {Status::converged, solve(), {}};
    } catch (const NonConvergenceError& e) {
        return {Status::diverged, std::nullopt, e.what()};
    } catch (const SingularError& e) {
        return {Status::singular, std::nullopt, e.what()};
    }
}

/// Runs `solve` `repeats` times; the returned attempt is the last one and
/// wall_time the median duration.
template <typename Solve>
std::pair<Attempt, double> timed(int repeats, Solve&& solve) {
    std::vector<double> durations;
    durations.reserve(static_cast<std::size_t>(repeats));
    Attempt last;
    for (int i = 0; i < repeats; ++i) {
        const auto start = Clock::now();
        last = attempt(solve);
        durations.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    return {std::move(last), median(std::move(durations))};
}

SolveReport make_report(const cases::CaseSpec& spec, Method method, const cases::RunParams& params,
                        Attempt result, double wall_time) {
    SolveReport report;
    report.id = spec.id;
    report.method = method;
    report.params = params;
    report.status = result.status;
    report.wall_time = wall_time;
    report.message = std::move(result.message);
    if (result.status == Status::converged) {
        report.sup_error = cases::sup_error(*result.solution, spec);
    }
    report.solution = std::move(result.solution);
    return report;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    file << text;
    if (!file) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

const SolveReport* find(const std::vector<SolveReport>& reports, Method method) {
    for (const auto& r : reports) {
        if (r.method == method && r.status == Status::converged && r.solution) {
            return &r;
        }
    }
    return nullptr;
}

std::vector<double> nodes_of(const GridFunction& g) {
    std::vector<double> xs(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) xs[j] = g.x(j);
    return xs;
}

std::vector<double> values_of(const GridFunction& g) {
    return {g.values().begin(), g.values().end()};
}

}  // namespace

MethodSelection parse_method(std::string_view text) {
    if (text == "fdm") return MethodSelection::fdm;
    if (text == "ifoi") return MethodSelection::ifoi;
    if (text == "both") return MethodSelection::both;
    throw DomainError("unknown method '" + std::string(text) + "'");
}

RunResult run(const RunConfig& config) {
    if (config.repeats < 1) {
        throw DomainError("repeats must be at least 1");
    }
    const cases::CaseSpec spec = cases::get_case(config.case_id, config.case3);

    cases::RunParams params;
    params.n = config.n.value_or(spec.default_n);
    params.m = config.m.value_or(spec.default_partition.stage_count());
    params.spacing = config.spacing.value_or(spec.default_partition.spacing());
    params.scheme = config.scheme.value_or(spec.default_scheme);
    if (params.n < 8) {
        throw DomainError("n must be at least 8");
    }
    const AlphaPartition partition(params.spacing, params.m);

    RunResult result;
    if (config.method != MethodSelection::ifoi) {
        auto [outcome, seconds] = timed(config.repeats, [&] {
            return spec.depends_on_u ? fdm::fdm_newton(spec, params.n).solution
                                     : fdm::fdm_linear(spec, params.n);
        });
        result.reports.push_back(make_report(spec, Method::fdm, params, std::move(outcome), seconds));
    }
    if (config.method != MethodSelection::fdm) {
        SolverOptions options;
        options.scheme = params.scheme;
        options.abm.corrector_passes = config.corrector_passes;
        options.picard_max_iterations = config.picard_max_iterations;
        if (config.memory_window) {
            options.memory = fracops::MemoryPolicy::truncated(*config.memory_window);
        }
        std::vector<IfoiTrace> traces;
        auto [outcome, seconds] = timed(config.repeats, [&] {
            traces.clear();
            return shooting::solve_bvp(spec,
                                       shooting::ifoi_solver(partition, params.n, options, &traces));
        });
        if (outcome.status == Status::converged && !traces.empty()) {
            result.trace = std::move(traces.front());
        }
        result.reports.push_back(make_report(spec, Method::ifoi, params, std::move(outcome), seconds));
    }

    if (!config.output_dir.empty()) {
        ensure_directory(config.output_dir);
        const auto csv = config.output_dir / (cases::to_string(spec.id) + "_run.csv");
        write_csv(csv, result.reports);
        result.written.push_back(csv);
        if (config.emit_trace) {
            auto plots = plot(result.reports, result.trace, config.output_dir, config.case3);
            result.written.insert(result.written.end(), plots.begin(), plots.end());
        }
    }
    return result;
}

std::vector<SolveReport> table1(const std::filesystem::path& output_dir, int repeats,
                                const cases::Case3Constants& case3) {
    constexpr std::size_t kResolutions[] = {40, 80, 200};
    std::vector<SolveReport> fdm_rows;
    std::vector<SolveReport> ifoi_rows;
    for (std::size_t n : kResolutions) {
        RunConfig config;
        config.case_id = cases::CaseId::case3;
        config.method = MethodSelection::both;
        config.n = n;
        config.repeats = repeats;
        config.case3 = case3;
        for (auto& r : run(config).reports) {
            (r.method == Method::fdm ? fdm_rows : ifoi_rows).push_back(std::move(r));
        }
    }
    std::vector<SolveReport> rows = std::move(fdm_rows);
    for (auto& r : ifoi_rows) rows.push_back(std::move(r));

    if (!output_dir.empty()) {
        ensure_directory(output_dir);
        write_csv(output_dir / "table1.csv", rows);
    }
    return rows;
}

std::vector<SolveReport> sweep(const RunConfig& base, const std::vector<std::size_t>& n_list) {
    if (n_list.empty()) {
        throw DomainError("sweep needs at least one resolution");
    }
    std::vector<SolveReport> rows;
    for (std::size_t n : n_list) {
        RunConfig config = base;
        config.n = n;
        config.output_dir.clear();
        config.emit_trace = false;
        for (auto& r : run(config).reports) rows.push_back(std::move(r));
    }
    if (!base.output_dir.empty()) {
        ensure_directory(base.output_dir);
        write_csv(base.output_dir / (cases::to_string(base.case_id) + "_sweep.csv"), rows);
    }
    return rows;
}

std::string render_evolution(const SolveReport& ifoi_report, const IfoiTrace& trace) {
    LinePlot plot;
    plot.title = fmt::format("{}: IFOI stage evolution ({}, {} m={}, n={})",
                             cases::to_string(ifoi_report.id),
                             fracops::to_string(ifoi_report.params.scheme),
                             to_string(ifoi_report.params.spacing), ifoi_report.params.m,
                             ifoi_report.params.n);
    plot.y_label = "value";

    if (trace.forcing) {
        plot.series.push_back({"forcing (S = 0)", "#1f77b4", nodes_of(*trace.forcing),
                               values_of(*trace.forcing), 2.0});
    }
    const std::size_t m = trace.stages.size();
    const std::size_t label_every = std::max<std::size_t>(1, (m + 9) / 10);
    for (std::size_t k = 0; k < m; ++k) {
        const auto& stage = trace.stages[k];
        Series s{fmt::format("S = {:.3f}", stage.cumulative_order),
                 ramp_color(stage.cumulative_order / 2.0), nodes_of(stage.values),
                 values_of(stage.values), 1.2};
        s.in_legend = (k + 1) % label_every == 0 || k + 1 == m;
        plot.series.push_back(std::move(s));
    }
    if (ifoi_report.solution) {
        plot.series.push_back({"solution u", "#2ca02c", nodes_of(*ifoi_report.solution),
                               values_of(*ifoi_report.solution), 2.5});
    }
    return render_svg(plot);
}

std::string render_comparison(const std::vector<SolveReport>& reports, const cases::CaseSpec& spec) {
    LinePlot plot;
    plot.title = fmt::format("{}: FDM, IFOI and reference solution", cases::to_string(spec.id));
    plot.y_label = "u(x)";

    constexpr std::size_t kSamples = 500;
    Series oracle{"reference", "#000000", {}, {}, 1.5};
    for (std::size_t i = 0; i <= kSamples; ++i) {
        const double x = static_cast<double>(i) / kSamples;
        oracle.x.push_back(x);
        oracle.y.push_back(cases::oracle_solution(spec, x));
    }
    plot.series.push_back(std::move(oracle));

    if (const auto* r = find(reports, Method::fdm)) {
        Series s{fmt::format("FDM (n={})", r->params.n), "#ff7f0e", nodes_of(*r->solution),
                 values_of(*r->solution), 1.8};
        s.dashed = true;
        plot.series.push_back(std::move(s));
    }
    if (const auto* r = find(reports, Method::ifoi)) {
        plot.series.push_back({fmt::format("IFOI ({}, n={})", fracops::to_string(r->params.scheme),
                                           r->params.n),
                               "#d62728", nodes_of(*r->solution), values_of(*r->solution), 1.8});
    }
    return render_svg(plot);
}

std::vector<std::filesystem::path> plot(const std::vector<SolveReport>& reports,
                                        const std::optional<IfoiTrace>& trace,
                                        const std::filesystem::path& output_dir,
                                        const cases::Case3Constants& case3) {
    std::vector<std::filesystem::path> written;
    if (reports.empty()) {
        return written;
    }
    ensure_directory(output_dir);
    const cases::CaseSpec spec = cases::get_case(reports.front().id, case3);
    const std::string stem = cases::to_string(spec.id);

    const auto* ifoi_report = find(reports, Method::ifoi);
    if (ifoi_report != nullptr && trace) {
        const auto path = output_dir / (stem + "_evolution.svg");
        write_text(path, render_evolution(*ifoi_report, *trace));
        written.push_back(path);
    }
    const auto path = output_dir / (stem + "_comparison.svg");
    write_text(path, render_comparison(reports, spec));
    written.push_back(path);
    return written;
}

}  // namespace ifoi::harness
