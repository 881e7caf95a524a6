#include "scoreplus/datasets.hpp"

#include <cstdlib>
#include <stdexcept>

namespace scoreplus {

namespace {

std::vector<DatasetSpec> make_registry() {
    std::vector<DatasetSpec> d;
    {
        DatasetSpec s{"polblogs", 2, {}, {}, false, 5, {}};
        s.published = {1222, 16714, 58, 51, {57, 54, 51, 51, 53, 54, 56, 58},
                       {0.36, 0.02, 0.06, 0.01}, {0.45, 0.02, 0.03, 0.01}, 0.5997, 0.5223};
        d.push_back(s);
    }
    {
        DatasetSpec s{"karate", 2, {}, {}, false, 2, {}};
        s.published = {34, 78, 0, 1, {1, 1, 1, 1, 1, 1, 0, 0},
                       {0.76, 0.07, 0.05, 0.01}, {0.81, 0.02, 0.01, 0.01}, 0.4140, 0.1768};
        d.push_back(s);
    }
    {
        DatasetSpec s{"dolphins", 2, {}, {}, false, 2, {}};
        s.published = {62, 159, 0, 2, {0, 1, 1, 2, 3, 3, 3, 3},
                       {0.60, 0.00, 0.01, 0.01}, {0.79, 0.00, 0.00, 0.02}, 0.1863, 0.2027};
        d.push_back(s);
    }
    {
        // conference value 5 marks the independent teams in football.gml
        DatasetSpec s{"football", 11, {"5"}, {}, false, 2, {}};
        s.published = {110, 570, 5, 6, {6, 6, 6, 6, 6, 6, 6, 6},
                       {0.45, 0.01, 0.00, 0.01}, {0.48, 0.22, 0.00, 0.02}, 1.9255, 0.1414};
        d.push_back(s);
    }
    {
        DatasetSpec s{"polbooks", 2, {"n"}, {}, false, 2, {}};
        s.published = {92, 374, 1, 2, {2, 2, 2, 2, 2, 2, 2, 2},
                       {0.63, 0.01, 0.01, 0.01}, {0.79, 0.01, 0.00, 0.00}, 0.5034, 0.2246};
        d.push_back(s);
    }
    {
        DatasetSpec s{"ukfaculty", 3, {}, {}, true, 2, {}};
        s.published = {79, 552, 2, 2, {1, 2, 2, 2, 2, 2, 3, 3},
                       {0.80, 0.11, 0.00, 0.00}, {0.89, 0.06, 0.00, 0.00}, 0.3139, 0.3336};
        d.push_back(s);
    }
    {
        DatasetSpec s{"simmons", 4, {}, {"2006", "2007", "2008", "2009"}, false, 10, {}};
        s.published = {1137, 24257, 268, 127, {127, 117, 121, 127, 134, 137, 141, 142},
                       {0.04, 0.20, 0.13, 0.15}, {0.07, 0.31, 0.08, 0.00}, 0.0804, 0.0533};
        d.push_back(s);
    }
    {
        DatasetSpec s{"caltech", 8, {"0"}, {}, false, 10, {}};
        s.published = {590, 12822, 183, 98, {99, 100, 99, 98, 101, 101, 104, 105},
                       {0.25, 0.47, 0.06, 0.11}, {0.32, 0.54, 0.03, 0.09}, 0.0777, 0.0236};
        d.push_back(s);
    }
    return d;
}

}  // namespace

const std::vector<DatasetSpec>& benchmark_datasets() {
    static const std::vector<DatasetSpec> registry = make_registry();
    return registry;
}

const DatasetSpec& find_dataset(const std::string& name) {
    for (const auto& s : benchmark_datasets()) {
        if (s.name == name) return s;
    }
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

std::filesystem::path default_data_dir(const std::filesystem::path& fallback) {
    if (const char* env = std::getenv("SCOREPLUS_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return fallback;
}

Graph load_graph_file(const std::filesystem::path& graph_path, const std::optional<std::filesystem::path>& labels_path) {
    const std::string text = read_file(graph_path.string());
    if (graph_path.extension() == ".gml") {
        Graph g = parse_gml(text);
        if (labels_path) attach_labels(g, read_file(labels_path->string()));
        return g;
    }
    if (labels_path) {
        const std::string labels = read_file(labels_path->string());
        return parse_edge_list(text, std::string_view(labels));
    }
    return parse_edge_list(text);
}

std::optional<LoadedDataset> load_dataset(const DatasetSpec& spec, const std::filesystem::path& data_dir) {
    namespace fs = std::filesystem;
    const fs::path gml = data_dir / (spec.name + ".gml");
    const fs::path edges = data_dir / (spec.name + ".edges");
    const fs::path labels = data_dir / (spec.name + ".labels");

    LoadedDataset out;
    std::optional<fs::path> label_file;
    if (fs::exists(labels)) label_file = labels;
    if (fs::exists(gml)) {
        out.graph = load_graph_file(gml, label_file);
        out.files.push_back(gml);
    } else if (fs::exists(edges) && label_file) {
        out.graph = load_graph_file(edges, label_file);
        out.files.push_back(edges);
    } else {
        return std::nullopt;
    }
    if (label_file) out.files.push_back(*label_file);
    if (!out.graph.has_labels()) {
        throw std::runtime_error("dataset '" + spec.name + "' has no ground-truth labels");
    }

    Graph& g = out.graph;
    if (!spec.kept_labels.empty()) {
        std::set<std::string> drop;
        for (const auto& name : g.label_names()) {
            if (!spec.kept_labels.contains(name)) drop.insert(name);
        }
        g = filter_by_label(g, drop);
    }
    if (!spec.excluded_labels.empty()) g = filter_by_label(g, spec.excluded_labels);
    if (spec.drop_smallest_class) g = drop_smallest_class(g);
    g = largest_connected_component(g);
    return out;
}

}  // namespace scoreplus
