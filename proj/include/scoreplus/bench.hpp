#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace scoreplus {

enum class CellStatus { Pass, Fail, Info };

/// One reproduced number next to its published counterpart.
struct BenchRow {
    std::string subject;   // dataset, or experiment/n for simulations
    std::string metric;
    double ours = 0.0;
    std::optional<double> published;
    std::string tolerance; // human-readable gate, empty for Info rows
    CellStatus status = CellStatus::Info;
};

struct BenchTable {
    std::string name;
    std::vector<BenchRow> rows;
    std::vector<std::string> missing_datasets;
    double seconds = 0.0;

    std::size_t failures() const;
    std::size_t gated() const;
    /// Every gate passed and nothing was missing.
    bool complete_and_passing() const;
    std::string to_tsv() const;
};

struct BenchOptions {
    std::filesystem::path data_dir = "data";
    int restarts = 100;
    std::uint64_t seed = 0;
    /// Replicate seeds for the simulation suite.
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::size_t> sim_sizes = {1000, 2000};
    std::vector<int> experiments = {1, 2};
    /// Restrict real-data suites to these datasets (all when empty).
    std::vector<std::string> datasets;
    /// Where the diagnostics suite writes per-dataset scree/RQ plot data, if set.
    std::optional<std::filesystem::path> plot_dir;
    unsigned threads = 0;  // 0 = hardware concurrency
};

BenchTable bench_realdata(const BenchOptions& options);
BenchTable bench_delta_sweep(const BenchOptions& options);
BenchTable bench_diagnostics(const BenchOptions& options);
BenchTable bench_simulation(const BenchOptions& options);

struct SimulationCell {
    int experiment = 0;
    std::size_t n = 0;
    double score_error = 0.0;       // mean over replicates
    double score_plus_error = 0.0;
    double score_seconds = 0.0;
    double score_plus_seconds = 0.0;
    std::size_t replicates = 0;
};

/// Mean SCORE / SCORE+ error rates over the given replicate seeds, measured on
/// the largest connected component of each simulated network.
SimulationCell simulate_cell(int experiment, std::size_t n, const std::vector<std::uint64_t>& seeds, int restarts,
                             std::uint64_t kmeans_seed);

/// Published (SCORE, SCORE+) mean error for the simulation designs, if tabulated.
std::optional<std::pair<double, double>> published_simulation_error(int experiment, std::size_t n);

const char* to_string(CellStatus s);

}  // namespace scoreplus
