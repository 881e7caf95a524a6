#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scoreplus/graph.hpp"

namespace scoreplus {

inline constexpr std::array<double, 8> kDeltaGrid = {0.025, 0.05, 0.075, 0.10, 0.125, 0.15, 0.175, 0.20};

/// Published reference numbers for one benchmark network.
struct PublishedResults {
    std::size_t n = 0;
    std::size_t edges = 0;
    int score_errors = 0;
    int score_plus_errors = 0;
    std::array<int, 8> delta_sweep{};     // SCORE+ errors on kDeltaGrid, t = 0.1
    std::array<double, 4> rq_adjacency{}; // Q(xi_K) .. Q(xi_{K+3})
    std::array<double, 4> rq_laplacian{};
    double gap_adjacency = 0.0;
    double gap_laplacian = 0.0;
};

/**
 * A benchmark network and its preprocessing. Files are looked up in the data
 * directory as `<name>.gml`, or `<name>.edges` plus `<name>.labels`; a
 * `<name>.labels` next to a GML file overrides the node `value` attributes.
 */
struct DatasetSpec {
    std::string name;
    int k = 0;
    std::set<std::string> excluded_labels;
    /// When non-empty, only nodes with these raw labels are kept.
    std::set<std::string> kept_labels;
    bool drop_smallest_class = false;
    int error_tolerance = 2;
    PublishedResults published;
};

const std::vector<DatasetSpec>& benchmark_datasets();
const DatasetSpec& find_dataset(const std::string& name);

/// Data directory: $SCOREPLUS_DATA_DIR when set, otherwise `fallback`.
std::filesystem::path default_data_dir(const std::filesystem::path& fallback = "data");

struct LoadedDataset {
    Graph graph;
    std::vector<std::filesystem::path> files;
};

/// nullopt when the files are absent. Applies label filters, the
/// smallest-class rule and the largest-component restriction.
std::optional<LoadedDataset> load_dataset(const DatasetSpec& spec, const std::filesystem::path& data_dir);

/// Read a graph file by extension (.gml, otherwise edge list) with an optional label file.
Graph load_graph_file(const std::filesystem::path& graph_path, const std::optional<std::filesystem::path>& labels_path);

}  // namespace scoreplus
