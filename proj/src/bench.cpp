#include "scoreplus/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "scoreplus/datasets.hpp"
#include "scoreplus/dcbm.hpp"
#include "scoreplus/diagnostics.hpp"
#include "scoreplus/pipeline.hpp"

namespace scoreplus {

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Pass: return "PASS";
        case CellStatus::Fail: return "FAIL";
        case CellStatus::Info: return "info";
    }
    return "?";
}

std::size_t BenchTable::failures() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return r.status == CellStatus::Fail; }));
}

std::size_t BenchTable::gated() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return r.status != CellStatus::Info; }));
}

bool BenchTable::complete_and_passing() const { return missing_datasets.empty() && failures() == 0; }

std::string BenchTable::to_tsv() const {
    std::ostringstream os;
    os << "# " << name << '\n';
    os << "subject\tmetric\tours\tpublished\ttolerance\tstatus\n";
    for (const auto& r : rows) {
        os << r.subject << '\t' << r.metric << '\t' << std::setprecision(6) << r.ours << '\t';
        if (r.published) os << *r.published;
        else os << '-';
        os << '\t' << (r.tolerance.empty() ? "-" : r.tolerance) << '\t' << to_string(r.status) << '\n';
    }
    for (const auto& m : missing_datasets) os << "# missing dataset: " << m << '\n';
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

BenchRow gated_abs(std::string subject, std::string metric, double ours, double published, double tol, int digits) {
    BenchRow r;
    r.subject = std::move(subject);
    r.metric = std::move(metric);
    r.ours = ours;
    r.published = published;
    r.tolerance = "+-" + fmt(tol, digits);
    r.status = std::abs(ours - published) <= tol + 1e-12 ? CellStatus::Pass : CellStatus::Fail;
    return r;
}

std::size_t errors_of(const Graph& g, const PipelineConfig& cfg) {
    const auto result = run_pipeline(g, cfg);
    return error_rate(LabelVector(result.labels, cfg.k), LabelVector(g.labels(), g.num_labels())).count;
}

struct Loaded {
    const DatasetSpec* spec;
    Graph graph;
};

std::vector<const DatasetSpec*> selected(const BenchOptions& options) {
    std::vector<const DatasetSpec*> out;
    for (const auto& s : benchmark_datasets()) {
        if (options.datasets.empty() ||
            std::find(options.datasets.begin(), options.datasets.end(), s.name) != options.datasets.end()) {
            out.push_back(&s);
        }
    }
    return out;
}

std::vector<Loaded> load_all(const BenchOptions& options, std::vector<std::string>& missing) {
    std::vector<Loaded> out;
    for (const auto* spec : selected(options)) {
        auto ds = load_dataset(*spec, options.data_dir);
        if (!ds) {
            missing.push_back(spec->name);
            continue;
        }
        out.push_back({spec, std::move(ds->graph)});
    }
    return out;
}

// Runs f over items on a bounded number of threads; results keep item order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, unsigned threads, F f) {
    using R = decltype(f(items.front()));
    std::vector<R> results(items.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t next = 0;
    while (next < items.size()) {
        std::vector<std::future<R>> batch;
        const std::size_t end = std::min(items.size(), next + threads);
        for (std::size_t i = next; i < end; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] { return f(items[i]); }));
        }
        for (std::size_t i = next; i < end; ++i) results[i] = batch[i - next].get();
        next = end;
    }
    return results;
}

}  // namespace

BenchTable bench_realdata(const BenchOptions& options) {
    const auto start = Clock::now();
    BenchTable table;
    table.name = "realdata: error counts, (t, delta) = (0.1, 0.1)";
    auto data = load_all(options, table.missing_datasets);

    auto rows = parallel_map(data, options.threads, [&](const Loaded& d) {
        std::vector<BenchRow> out;
        const auto& spec = *d.spec;
        const double tol = spec.error_tolerance;
        const auto score = PipelineConfig::score(spec.k, options.seed);
        auto score_cfg = score;
        score_cfg.kmeans_restarts = options.restarts;
        auto plus_cfg = PipelineConfig::score_plus(spec.k, 0.1, 0.1, options.seed);
        plus_cfg.kmeans_restarts = options.restarts;

        BenchRow nodes;
        nodes.subject = spec.name;
        nodes.metric = "nodes";
        nodes.ours = static_cast<double>(d.graph.num_nodes());
        nodes.published = static_cast<double>(spec.published.n);
        out.push_back(nodes);

        out.push_back(gated_abs(spec.name, "SCORE errors", static_cast<double>(errors_of(d.graph, score_cfg)),
                                spec.published.score_errors, tol, 0));
        out.push_back(gated_abs(spec.name, "SCORE+ errors", static_cast<double>(errors_of(d.graph, plus_cfg)),
                                spec.published.score_plus_errors, tol, 0));
        if (spec.name == "polblogs") {
            auto raw = score_cfg;
            raw.post_pca = false;
            BenchRow r;
            r.subject = spec.name;
            r.metric = "SCORE errors without ratio step";
            r.ours = static_cast<double>(errors_of(d.graph, raw));
            r.published = 437;
            r.tolerance = "[400, 470]";
            r.status = r.ours >= 400 && r.ours <= 470 ? CellStatus::Pass : CellStatus::Fail;
            out.push_back(r);
            BenchRow with;
            with.subject = spec.name;
            with.metric = "SCORE errors with ratio step";
            with.ours = out[1].ours;
            with.published = 58;
            with.tolerance = "[50, 70]";
            with.status = with.ours >= 50 && with.ours <= 70 ? CellStatus::Pass : CellStatus::Fail;
            out.push_back(with);
        }
        return out;
    });
    for (auto& r : rows) table.rows.insert(table.rows.end(), r.begin(), r.end());
    table.seconds = seconds_since(start);
    return table;
}

BenchTable bench_delta_sweep(const BenchOptions& options) {
    const auto start = Clock::now();
    BenchTable table;
    table.name = "delta-sweep: SCORE+ errors, t = 0.1";
    auto data = load_all(options, table.missing_datasets);

    auto rows = parallel_map(data, options.threads, [&](const Loaded& d) {
        std::vector<BenchRow> out;
        const auto& spec = *d.spec;
        std::array<double, kDeltaGrid.size()> errs{};
        for (std::size_t i = 0; i < kDeltaGrid.size(); ++i) {
            auto cfg = PipelineConfig::score_plus(spec.k, kDeltaGrid[i], 0.1, options.seed);
            cfg.kmeans_restarts = options.restarts;
            errs[i] = static_cast<double>(errors_of(d.graph, cfg));
            out.push_back(gated_abs(spec.name, "errors at delta=" + fmt(kDeltaGrid[i], 3), errs[i],
                                    spec.published.delta_sweep[i], spec.error_tolerance, 0));
        }
        if (spec.name == "simmons") {
            const auto best = static_cast<std::size_t>(std::min_element(errs.begin(), errs.end()) - errs.begin());
            BenchRow r;
            r.subject = spec.name;
            r.metric = "argmin delta";
            r.ours = kDeltaGrid[best];
            r.published = 0.05;
            r.tolerance = "+-0.025 (one grid step)";
            r.status = std::abs(r.ours - 0.05) <= 0.025 + 1e-12 ? CellStatus::Pass : CellStatus::Fail;
            out.push_back(r);
        }
        return out;
    });
    for (auto& r : rows) table.rows.insert(table.rows.end(), r.begin(), r.end());
    table.seconds = seconds_since(start);
    return table;
}

BenchTable bench_diagnostics(const BenchOptions& options) {
    const auto start = Clock::now();
    BenchTable table;
    table.name = "diagnostics: gap statistic and Rayleigh quotients, delta = 0.1";
    auto data = load_all(options, table.missing_datasets);
    if (options.plot_dir) std::filesystem::create_directories(*options.plot_dir);

    auto rows = parallel_map(data, options.threads, [&](const Loaded& d) {
        std::vector<BenchRow> out;
        const auto& spec = *d.spec;
        const int depth = std::min<int>(spec.k + 10, static_cast<int>(d.graph.num_nodes()));
        const ScreeReport report = scree_and_rq_report(d.graph, spec.k, 0.1, depth);
        if (options.plot_dir) {
            std::ofstream(*options.plot_dir / (spec.name + ".scree.tsv")) << report.to_tsv();
        }
        out.push_back(gated_abs(spec.name, "gap adjacency", report.gap_adjacency, spec.published.gap_adjacency, 0.002, 3));
        out.push_back(gated_abs(spec.name, "gap laplacian", report.gap_laplacian, spec.published.gap_laplacian, 0.002, 3));
        for (int j = 0; j < 4; ++j) {
            const auto idx = static_cast<std::size_t>(spec.k - 1 + j);
            if (idx >= report.rows.size()) break;
            const std::string which = j == 0 ? "K" : "K+" + std::to_string(j);
            out.push_back(gated_abs(spec.name, "RQ adjacency Eigen(" + which + ")", report.rows[idx].rq_adjacency,
                                    spec.published.rq_adjacency[static_cast<std::size_t>(j)], 0.02, 2));
            out.push_back(gated_abs(spec.name, "RQ laplacian Eigen(" + which + ")", report.rows[idx].rq_laplacian,
                                    spec.published.rq_laplacian[static_cast<std::size_t>(j)], 0.02, 2));
        }
        return out;
    });
    for (auto& r : rows) table.rows.insert(table.rows.end(), r.begin(), r.end());
    table.seconds = seconds_since(start);
    return table;
}

std::optional<std::pair<double, double>> published_simulation_error(int experiment, std::size_t n) {
    static const std::map<std::pair<int, std::size_t>, std::pair<double, double>> table = {
        {{1, 1000}, {0.40, 0.26}}, {{1, 2000}, {0.47, 0.21}}, {{1, 4000}, {0.44, 0.17}},
        {{1, 7000}, {0.45, 0.14}}, {{1, 10000}, {0.67, 0.14}}, {{2, 1000}, {0.37, 0.07}},
        {{2, 2000}, {0.31, 0.05}}, {{2, 4000}, {0.30, 0.05}}, {{2, 7000}, {0.26, 0.03}},
        {{2, 10000}, {0.27, 0.03}},
    };
    auto it = table.find({experiment, n});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

SimulationCell simulate_cell(int experiment, std::size_t n, const std::vector<std::uint64_t>& seeds, int restarts,
                             std::uint64_t kmeans_seed) {
    SimulationCell cell;
    cell.experiment = experiment;
    cell.n = n;
    const Eigen::MatrixXd p = experiment_p_matrix(experiment);
    const int k = static_cast<int>(p.rows());
    for (auto seed : seeds) {
        const DcbmParams params = experiment_params(n, p, seed);
        const Graph g = largest_connected_component(sample_adjacency(params, seed).graph);
        const LabelVector truth(g.labels(), g.num_labels());

        auto score = PipelineConfig::score(k, kmeans_seed);
        score.kmeans_restarts = restarts;
        auto t0 = Clock::now();
        const auto rs = run_pipeline(g, score);
        cell.score_seconds += seconds_since(t0);
        cell.score_error += error_rate(LabelVector(rs.labels, k), truth).rate;

        auto plus = PipelineConfig::score_plus(k, 0.1, 0.1, kmeans_seed);
        plus.kmeans_restarts = restarts;
        t0 = Clock::now();
        const auto rp = run_pipeline(g, plus);
        cell.score_plus_seconds += seconds_since(t0);
        cell.score_plus_error += error_rate(LabelVector(rp.labels, k), truth).rate;
        ++cell.replicates;
    }
    if (cell.replicates > 0) {
        const double r = static_cast<double>(cell.replicates);
        cell.score_error /= r;
        cell.score_plus_error /= r;
        cell.score_seconds /= r;
        cell.score_plus_seconds /= r;
    }
    return cell;
}

BenchTable bench_simulation(const BenchOptions& options) {
    const auto start = Clock::now();
    BenchTable table;
    table.name = "simulation: mean error rate over replicates";
    std::vector<std::pair<int, std::size_t>> jobs;
    for (int e : options.experiments) {
        for (auto n : options.sim_sizes) jobs.emplace_back(e, n);
    }
    auto cells = parallel_map(jobs, options.threads, [&](const std::pair<int, std::size_t>& job) {
        return simulate_cell(job.first, job.second, options.seeds, options.restarts, options.seed);
    });
    for (const auto& c : cells) {
        const std::string subject = "experiment " + std::to_string(c.experiment) + ", n=" + std::to_string(c.n);
        const auto published = published_simulation_error(c.experiment, c.n);
        // only the second design at n = 1000 and 2000 carries a pinned gate
        const bool gated = c.experiment == 2 && (c.n == 1000 || c.n == 2000);

        BenchRow s;
        s.subject = subject;
        s.metric = "SCORE error";
        s.ours = c.score_error;
        if (published) s.published = published->first;
        table.rows.push_back(s);

        BenchRow p;
        if (gated && published) {
            p = gated_abs(subject, "SCORE+ error", c.score_plus_error, published->second, 0.04, 2);
        } else {
            p.subject = subject;
            p.metric = "SCORE+ error";
            p.ours = c.score_plus_error;
            if (published) p.published = published->second;
        }
        table.rows.push_back(p);

        if (c.experiment == 2 && c.n == 1000) {
            BenchRow gap;
            gap.subject = subject;
            gap.metric = "SCORE - SCORE+ error";
            gap.ours = c.score_error - c.score_plus_error;
            gap.published = 0.30;
            gap.tolerance = ">= 0.15";
            gap.status = gap.ours >= 0.15 ? CellStatus::Pass : CellStatus::Fail;
            table.rows.push_back(gap);
        }

        BenchRow ts;
        ts.subject = subject;
        ts.metric = "SCORE seconds";
        ts.ours = c.score_seconds;
        table.rows.push_back(ts);
        BenchRow tp;
        tp.subject = subject;
        tp.metric = "SCORE+ seconds";
        tp.ours = c.score_plus_seconds;
        table.rows.push_back(tp);
    }
    table.seconds = seconds_since(start);
    return table;
}

}  // namespace scoreplus
