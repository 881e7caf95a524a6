// scoreplus: command-line front end (detect / simulate / bench / report).
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "scoreplus/bench.hpp"
#include "scoreplus/datasets.hpp"
#include "scoreplus/dcbm.hpp"
#include "scoreplus/diagnostics.hpp"
#include "scoreplus/manifest.hpp"
#include "scoreplus/pipeline.hpp"

namespace fs = std::filesystem;
using namespace scoreplus;

namespace {

constexpr const char* kVersion = "0.1.0";

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
    return out;
}

struct DetectArgs {
    std::string graph;
    std::string labels;
    std::string method = "score+";
    int k = 2;
    double delta = 0.1;
    double t = 0.1;
    std::uint64_t seed = 0;
    int restarts = 100;
    std::string out = "scoreplus_out";
    bool largest_component = false;
    std::vector<std::string> exclude_labels;
    std::string pre_pca, weight, extra;  // "on"/"off" overrides
    bool threshold = false;
    bool no_ratio = false;
};

bool toggle(const std::string& value, bool fallback) {
    if (value.empty()) return fallback;
    return value == "on";
}

int run_detect(const DetectArgs& a) {
    std::optional<fs::path> label_path;
    if (!a.labels.empty()) label_path = a.labels;
    Graph g = load_graph_file(a.graph, label_path);
    const std::size_t n_input = g.num_nodes();
    if (!a.exclude_labels.empty()) {
        if (!g.has_labels()) throw std::runtime_error("--exclude-label needs ground-truth labels");
        g = filter_by_label(g, {a.exclude_labels.begin(), a.exclude_labels.end()});
    }
    if (a.largest_component) g = largest_connected_component(g);
    if (!is_connected(g)) {
        throw std::runtime_error("graph has " + std::to_string(connected_components(g).size()) +
                                 " connected components; rerun with --largest-component");
    }

    PipelineConfig cfg = a.method == "score" ? PipelineConfig::score(a.k, a.seed)
                                             : PipelineConfig::score_plus(a.k, a.delta, a.t, a.seed);
    cfg.pre_pca = toggle(a.pre_pca, cfg.pre_pca);
    cfg.weight_by_eigenvalue = toggle(a.weight, cfg.weight_by_eigenvalue);
    cfg.extra_vector = toggle(a.extra, cfg.extra_vector);
    cfg.delta = a.delta;
    cfg.t = a.t;
    cfg.threshold_ratios = a.threshold;
    cfg.post_pca = !a.no_ratio;
    cfg.kmeans_restarts = a.restarts;

    const auto start = std::chrono::steady_clock::now();
    const DetectionResult result = run_pipeline(g, cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const fs::path out_dir = a.out;
    fs::create_directories(out_dir);
    std::ostringstream labels;
    for (std::size_t i = 0; i < g.num_nodes(); ++i) labels << g.node_name(i) << '\t' << result.labels[i] << '\n';
    write_text(out_dir / "labels.tsv", labels.str());

    RunManifest m;
    m.set("tool_version", std::string(kVersion));
    m.set("command", std::string("detect"));
    m.set("method", cfg.method_name());
    m.set("input.graph", a.graph);
    m.set("input.graph.sha256", sha256_file(a.graph));
    if (label_path) {
        m.set("input.labels", a.labels);
        m.set("input.labels.sha256", sha256_file(a.labels));
    }
    m.set("input.nodes", static_cast<long long>(n_input));
    m.set("nodes", static_cast<long long>(g.num_nodes()));
    m.set("edges", static_cast<long long>(g.num_edges()));
    m.set("excluded_labels", join(a.exclude_labels));
    m.set("largest_component", std::string(a.largest_component ? "yes" : "no"));
    m.set("k", static_cast<long long>(cfg.k));
    m.set("pre_pca", std::string(cfg.pre_pca ? "on" : "off"));
    m.set("delta", cfg.delta);
    m.set("weight_by_eigenvalue", std::string(cfg.weight_by_eigenvalue ? "on" : "off"));
    m.set("extra_vector", std::string(cfg.extra_vector ? "on" : "off"));
    m.set("t", cfg.t);
    m.set("threshold_ratios", std::string(cfg.threshold_ratios ? "on" : "off"));
    m.set("ratio_step", std::string(cfg.post_pca ? "on" : "off"));
    m.set("kmeans_restarts", static_cast<long long>(cfg.kmeans_restarts));
    m.set("seed", std::to_string(cfg.seed));
    m.set("m_used", static_cast<long long>(result.m_used));
    m.set("gap", result.gap);
    m.set("weak_signal", std::string(result.weak_signal ? "yes" : "no"));
    m.set("kmeans_objective", result.kmeans_objective);
    m.set("nonempty_clusters", static_cast<long long>(result.nonempty_clusters));
    m.set("seconds", seconds);
    for (Eigen::Index i = 0; i < result.eigenvalues.size(); ++i) {
        m.set("eigenvalue." + std::to_string(i + 1), result.eigenvalues(i));
    }

    std::cout << cfg.method_name() << ": n=" << g.num_nodes() << " K=" << cfg.k << " M=" << result.m_used
              << " gap=" << result.gap << '\n';
    if (result.nonempty_clusters < cfg.k) {
        std::cerr << "warning: only " << result.nonempty_clusters << " of " << cfg.k << " clusters are non-empty\n";
    }
    if (g.has_labels()) {
        const auto err = error_rate(LabelVector(result.labels, cfg.k), LabelVector(g.labels(), g.num_labels()));
        m.set("errors", static_cast<long long>(err.count));
        m.set("error_rate", err.rate);
        std::cout << "errors: " << err.count << "/" << g.num_nodes() << " (" << err.rate << ")\n";
    }
    write_text(out_dir / "manifest.txt", m.serialize());
    std::cout << "wrote " << (out_dir / "labels.tsv").string() << '\n';
    return 0;
}

struct SimulateArgs {
    std::size_t n = 1000;
    int experiment = 2;
    std::string p_matrix;
    int k = 0;
    std::uint64_t seed = 1;
    std::string out = "sim";
};

int run_simulate(const SimulateArgs& a) {
    if (a.n == 0) throw std::invalid_argument("--n must be positive");
    Eigen::MatrixXd p;
    if (!a.p_matrix.empty()) p = parse_p_matrix(read_file(a.p_matrix));
    else p = experiment_p_matrix(a.experiment);
    if (a.k != 0 && a.k != p.rows()) {
        throw std::invalid_argument("--k " + std::to_string(a.k) + " does not match the " + std::to_string(p.rows()) +
                                    "x" + std::to_string(p.rows()) + " P matrix");
    }
    const DcbmParams params = experiment_params(a.n, p, a.seed);
    const SimulatedNetwork net = sample_adjacency(params, a.seed);
    const Graph& g = net.graph;

    const fs::path out = a.out;
    fs::create_directories(out);
    // an edge list cannot carry isolated nodes, so their labels are left out too
    std::vector<NodeIndex> touched;
    for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
        if (g.degree(i) > 0) touched.push_back(i);
    }
    const std::size_t isolated = g.num_nodes() - touched.size();
    const Graph exported = induced_subgraph(g, touched);
    write_text(out / "graph.edges", write_edge_list(exported));
    write_text(out / "graph.labels", write_labels(exported));
    const auto info = degree_info(g);
    RunManifest m;
    m.set("tool_version", std::string(kVersion));
    m.set("command", std::string("simulate"));
    m.set("n", static_cast<long long>(a.n));
    m.set("k", static_cast<long long>(p.rows()));
    m.set("p_matrix", a.p_matrix.empty() ? "experiment " + std::to_string(a.experiment) : a.p_matrix);
    m.set("seed", std::to_string(a.seed));
    m.set("c_n", ParetoSpec::for_size(a.n).c_n);
    m.set("edges", static_cast<long long>(g.num_edges()));
    m.set("mean_degree", info.d_bar);
    m.set("isolated_nodes", static_cast<long long>(isolated));
    m.set("clamped_pairs", static_cast<long long>(net.clamped_pairs));
    m.set("output.graph.sha256", sha256_file((out / "graph.edges").string()));
    m.set("output.labels.sha256", sha256_file((out / "graph.labels").string()));
    write_text(out / "manifest.txt", m.serialize());
    std::cout << "simulated n=" << a.n << " edges=" << g.num_edges() << " mean degree=" << info.d_bar
              << " isolated=" << isolated << " (isolated nodes are absent from graph.edges)\n";
    return 0;
}

struct BenchArgs {
    std::string suite = "all";
    std::string data_dir;
    std::string out = "bench_out";
    std::vector<std::uint64_t> seeds;
    std::vector<std::size_t> sizes;
    std::vector<std::string> datasets;
    int restarts = 100;
    unsigned threads = 0;
};

int run_bench(const BenchArgs& a) {
    BenchOptions opt;
    opt.data_dir = a.data_dir.empty() ? default_data_dir() : fs::path(a.data_dir);
    opt.restarts = a.restarts;
    opt.threads = a.threads;
    opt.datasets = a.datasets;
    if (!a.seeds.empty()) opt.seeds = a.seeds;
    if (!a.sizes.empty()) opt.sim_sizes = a.sizes;
    const fs::path out = a.out;
    fs::create_directories(out);
    opt.plot_dir = out / "plots";

    const std::set<std::string> known = {"realdata", "delta-sweep", "diagnostics", "simulation", "all"};
    if (!known.contains(a.suite)) throw std::invalid_argument("unknown suite '" + a.suite + "'");
    auto want = [&](const std::string& s) { return a.suite == "all" || a.suite == s; };

    std::vector<std::pair<std::string, BenchTable>> tables;
    if (want("realdata")) tables.emplace_back("realdata", bench_realdata(opt));
    if (want("delta-sweep")) tables.emplace_back("delta-sweep", bench_delta_sweep(opt));
    if (want("diagnostics")) tables.emplace_back("diagnostics", bench_diagnostics(opt));
    if (want("simulation")) tables.emplace_back("simulation", bench_simulation(opt));

    bool ok = true;
    for (const auto& [name, table] : tables) {
        const std::string tsv = table.to_tsv();
        write_text(out / (name + ".tsv"), tsv);
        std::cout << tsv;
        std::cout << "# " << name << ": " << table.gated() - table.failures() << "/" << table.gated()
                  << " gated cells pass, " << table.seconds << " s\n\n";
        for (const auto& m : table.missing_datasets) {
            std::cerr << "skipped " << m << ": no " << m << ".gml or " << m << ".edges/.labels in "
                      << opt.data_dir.string() << " (see scripts/fetch_datasets.sh)\n";
        }
        ok = ok && table.complete_and_passing();
    }
    return ok ? 0 : 1;
}

struct ReportArgs {
    std::string graph;
    std::string labels;
    std::string dataset;
    std::string data_dir;
    int k = 2;
    double delta = 0.1;
    int depth = 0;
    std::string out;
};

int run_report(const ReportArgs& a) {
    Graph g;
    int k = a.k;
    if (!a.dataset.empty()) {
        const auto& spec = find_dataset(a.dataset);
        auto ds = load_dataset(spec, a.data_dir.empty() ? default_data_dir() : fs::path(a.data_dir));
        if (!ds) throw std::runtime_error("dataset '" + a.dataset + "' not found in the data directory");
        g = std::move(ds->graph);
        k = spec.k;
    } else {
        if (a.graph.empty()) throw std::invalid_argument("report needs a graph file or --dataset");
        std::optional<fs::path> label_path;
        if (!a.labels.empty()) label_path = a.labels;
        g = largest_connected_component(load_graph_file(a.graph, label_path));
    }
    if (!g.has_labels()) throw std::runtime_error("report needs ground-truth labels");
    const int depth = a.depth > 0 ? a.depth : k + 10;
    const ScreeReport report = scree_and_rq_report(g, k, a.delta, depth);
    const std::string tsv = report.to_tsv();
    if (a.out.empty()) std::cout << tsv;
    else write_text(a.out, tsv);
    std::cerr << "gap adjacency " << report.gap_adjacency << ", gap laplacian " << report.gap_laplacian << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SCORE / SCORE+ spectral community detection"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    DetectArgs d;
    auto* detect = app.add_subcommand("detect", "cluster a graph into K communities");
    detect->add_option("graph", d.graph, "edge list or .gml file")->required()->check(CLI::ExistingFile);
    detect->add_option("--labels", d.labels, "node<TAB>label ground truth")->check(CLI::ExistingFile);
    detect->add_option("--method", d.method)->check(CLI::IsMember({"score", "score+"}));
    detect->add_option("--k", d.k, "number of communities")->check(CLI::Range(2, 1000000));
    detect->add_option("--delta", d.delta, "Laplacian regularization");
    detect->add_option("--t", d.t, "eigen-gap threshold");
    detect->add_option("--seed", d.seed);
    detect->add_option("--restarts", d.restarts, "k-means restarts")->check(CLI::PositiveNumber);
    detect->add_option("--out", d.out, "output directory");
    detect->add_flag("--largest-component", d.largest_component, "restrict to the largest connected component");
    detect->add_option("--exclude-label", d.exclude_labels, "drop nodes with this ground-truth label");
    const auto onoff = CLI::IsMember({"on", "off"});
    detect->add_option("--pre-pca", d.pre_pca, "regularized Laplacian normalization")->check(onoff);
    detect->add_option("--eigen-weight", d.weight, "weight eigenvectors by eigenvalues")->check(onoff);
    detect->add_option("--extra-vector", d.extra, "admit an extra eigenvector on weak signal")->check(onoff);
    detect->add_flag("--threshold", d.threshold, "clip ratios to [-log n, log n]");
    detect->add_flag("--no-ratio", d.no_ratio, "cluster raw eigenvectors (ablation)");

    SimulateArgs s;
    auto* simulate = app.add_subcommand("simulate", "draw a network from a degree-corrected block model");
    simulate->add_option("--n", s.n)->required();
    simulate->add_option("--k", s.k, "checked against the P matrix");
    simulate->add_option("--experiment", s.experiment)->check(CLI::IsMember({1, 2}));
    simulate->add_option("--p-matrix", s.p_matrix, "whitespace-separated KxK file")->check(CLI::ExistingFile);
    simulate->add_option("--seed", s.seed);
    simulate->add_option("--out", s.out);

    BenchArgs b;
    auto* bench = app.add_subcommand("bench", "reproduce the benchmark tables");
    bench->add_option("--suite", b.suite)
        ->check(CLI::IsMember({"realdata", "delta-sweep", "diagnostics", "simulation", "all"}));
    bench->add_option("--data-dir", b.data_dir);
    bench->add_option("--out", b.out);
    bench->add_option("--seeds", b.seeds, "simulation replicate seeds");
    bench->add_option("--sizes", b.sizes, "simulation network sizes");
    bench->add_option("--dataset", b.datasets, "restrict real-data suites");
    bench->add_option("--restarts", b.restarts)->check(CLI::PositiveNumber);
    bench->add_option("--threads", b.threads);

    ReportArgs r;
    auto* report = app.add_subcommand("report", "scree and Rayleigh-quotient plot data");
    report->add_option("graph", r.graph)->check(CLI::ExistingFile);
    report->add_option("--labels", r.labels)->check(CLI::ExistingFile);
    report->add_option("--dataset", r.dataset);
    report->add_option("--data-dir", r.data_dir);
    report->add_option("--k", r.k)->check(CLI::Range(2, 1000000));
    report->add_option("--delta", r.delta);
    report->add_option("--depth", r.depth);
    report->add_option("--out", r.out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*detect) return run_detect(d);
        if (*simulate) return run_simulate(s);
        if (*bench) return run_bench(b);
        if (*report) return run_report(r);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
