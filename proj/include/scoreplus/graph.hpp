#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scoreplus {

using NodeIndex = std::size_t;

/// Unordered node pair stored with first < second.
struct Edge {
    NodeIndex first = 0;
    NodeIndex second = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}
    /// 1-based line of the offending input, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Undirected simple graph with optional node names and ground-truth labels.
 *
 * Edges are normalized on construction: self-loops and repeated pairs are
 * dropped and counted. Labels are stored as 1..K; the raw label string for
 * class k is label_names()[k - 1].
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> node_names = {});

    std::size_t num_nodes() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<NodeIndex>& neighbors(NodeIndex i) const { return adjacency_.at(i); }
    std::size_t degree(NodeIndex i) const { return adjacency_.at(i).size(); }

    const std::vector<std::string>& node_names() const noexcept { return names_; }
    std::string node_name(NodeIndex i) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<int>& labels() const noexcept { return labels_; }
    const std::vector<std::string>& label_names() const noexcept { return label_names_; }
    int num_labels() const noexcept { return static_cast<int>(label_names_.size()); }

    /// Labels must be in 1..names.size() and cover every node.
    void set_labels(std::vector<int> labels, std::vector<std::string> names);

    /// Assign labels from raw strings; classes are numbered by first appearance.
    void set_raw_labels(const std::vector<std::string>& raw);

    std::size_t dropped_self_loops() const noexcept { return self_loops_; }
    std::size_t dropped_duplicates() const noexcept { return duplicates_; }

    bool has_edge(NodeIndex i, NodeIndex j) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeIndex>> adjacency_;
    std::vector<std::string> names_;
    std::vector<int> labels_;
    std::vector<std::string> label_names_;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

struct DegreeInfo {
    std::vector<std::size_t> degrees;
    std::size_t d_min = 0;
    std::size_t d_max = 0;
    std::size_t degree_sum = 0;
    /// degree_sum / n
    double d_bar = 0.0;
};

/// Whitespace- or comma-delimited node pairs, `#` comments. Optional labels as
/// `node<TAB>label` lines, which must cover every node.
Graph parse_edge_list(std::string_view text, std::optional<std::string_view> label_text = std::nullopt);

/// Minimal GML reader: graph/node/edge blocks with id, label, value, source, target.
/// `value` becomes the ground-truth label, `label` the node name.
Graph parse_gml(std::string_view text);

/// Parse a `node<TAB>label` file against an existing graph, replacing its labels.
void attach_labels(Graph& g, std::string_view label_text);

Graph induced_subgraph(const Graph& g, const std::vector<NodeIndex>& keep);

/// Drop nodes whose raw label is in `excluded`; labels renumbered by first appearance.
Graph filter_by_label(const Graph& g, const std::set<std::string>& excluded);

/// Drop every class with the fewest members.
Graph drop_smallest_class(const Graph& g);

Graph largest_connected_component(const Graph& g);

/// Connected component id per node, numbered from 0 in order of lowest member.
std::vector<std::size_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);

DegreeInfo degree_info(const Graph& g);

std::string write_edge_list(const Graph& g);
std::string write_labels(const Graph& g);

std::string read_file(const std::string& path);

}  // namespace scoreplus
