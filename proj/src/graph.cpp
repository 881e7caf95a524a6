#include "scoreplus/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace scoreplus {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> node_names)
    : n_(n), adjacency_(n), names_(std::move(node_names)) {
    if (!names_.empty() && names_.size() != n_) {
        throw GraphError("node name count does not match node count");
    }
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (auto e : edges) {
        if (e.first >= n_ || e.second >= n_) {
            throw GraphError("edge endpoint out of range");
        }
        if (e.first == e.second) {
            ++self_loops_;
            continue;
        }
        if (e.first > e.second) std::swap(e.first, e.second);
        kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end());
    auto last = std::unique(kept.begin(), kept.end());
    duplicates_ = static_cast<std::size_t>(kept.end() - last);
    kept.erase(last, kept.end());
    edges_ = std::move(kept);
    for (const auto& e : edges_) {
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::string Graph::node_name(NodeIndex i) const {
    if (i >= n_) throw GraphError("node index out of range");
    return names_.empty() ? std::to_string(i) : names_[i];
}

void Graph::set_labels(std::vector<int> labels, std::vector<std::string> names) {
    if (labels.size() != n_) throw GraphError("label vector length does not match node count");
    const int k = static_cast<int>(names.size());
    for (int l : labels) {
        if (l < 1 || l > k) throw GraphError("label out of range 1.." + std::to_string(k));
    }
    labels_ = std::move(labels);
    label_names_ = std::move(names);
}

void Graph::set_raw_labels(const std::vector<std::string>& raw) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<int> labels;
    labels.reserve(raw.size());
    for (const auto& r : raw) {
        auto [it, inserted] = ids.try_emplace(r, static_cast<int>(names.size()) + 1);
        if (inserted) names.push_back(r);
        labels.push_back(it->second);
    }
    set_labels(std::move(labels), std::move(names));
}

bool Graph::has_edge(NodeIndex i, NodeIndex j) const {
    const auto& row = adjacency_.at(i);
    return std::binary_search(row.begin(), row.end(), j);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_sep(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineno;
        f(text.substr(pos, nl - pos), lineno);
        pos = nl + 1;
    }
}

bool skip_line(std::string_view line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string> parse_label_lines(std::string_view label_text,
                                           const std::unordered_map<std::string, NodeIndex>& index,
                                           std::size_t n) {
    std::vector<std::string> raw(n);
    std::vector<bool> seen(n, false);
    for_each_line(label_text, [&](std::string_view line, std::size_t lineno) {
        if (skip_line(line)) return;
        std::string_view node;
        std::string_view label;
        auto tab = line.find('\t');
        if (tab != std::string_view::npos) {
            node = line.substr(0, tab);
            label = line.substr(tab + 1);
        } else {
            auto fields = split_fields(line);
            if (fields.size() != 2) throw ParseError("expected `node<TAB>label`", lineno);
            node = fields[0];
            label = fields[1];
        }
        while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.remove_suffix(1);
        while (!node.empty() && node.front() == ' ') node.remove_prefix(1);
        while (!node.empty() && node.back() == ' ') node.remove_suffix(1);
        if (node.empty() || label.empty()) throw ParseError("expected `node<TAB>label`", lineno);
        auto it = index.find(std::string(node));
        if (it == index.end()) {
            throw ParseError("label given for unknown node '" + std::string(node) + "'", lineno);
        }
        raw[it->second] = std::string(label);
        seen[it->second] = true;
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) throw ParseError("no label for node index " + std::to_string(i), 0);
    }
    return raw;
}

}  // namespace

Graph parse_edge_list(std::string_view text, std::optional<std::string_view> label_text) {
    std::unordered_map<std::string, NodeIndex> index;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    auto intern = [&](std::string_view id) {
        auto [it, inserted] = index.try_emplace(std::string(id), names.size());
        if (inserted) names.emplace_back(id);
        return it->second;
    };
    for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        if (skip_line(line)) return;
        auto fields = split_fields(line);
        if (fields.size() != 2) {
            throw ParseError("expected two node identifiers, found " + std::to_string(fields.size()), lineno);
        }
        NodeIndex a = intern(fields[0]);
        NodeIndex b = intern(fields[1]);
        edges.push_back({a, b});
    });
    Graph g(names.size(), std::move(edges), names);
    if (label_text) {
        g.set_raw_labels(parse_label_lines(*label_text, index, g.num_nodes()));
    }
    return g;
}

void attach_labels(Graph& g, std::string_view label_text) {
    std::unordered_map<std::string, NodeIndex> index;
    for (NodeIndex i = 0; i < g.num_nodes(); ++i) index.emplace(g.node_name(i), i);
    g.set_raw_labels(parse_label_lines(label_text, index, g.num_nodes()));
}

Graph induced_subgraph(const Graph& g, const std::vector<NodeIndex>& keep) {
    constexpr auto absent = static_cast<NodeIndex>(-1);
    std::vector<NodeIndex> remap(g.num_nodes(), absent);
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= g.num_nodes()) throw GraphError("subgraph node out of range");
        if (remap[keep[k]] != absent) throw GraphError("duplicate node in subgraph selection");
        remap[keep[k]] = k;
        names.push_back(g.node_name(keep[k]));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (remap[e.first] != absent && remap[e.second] != absent) {
            edges.push_back({remap[e.first], remap[e.second]});
        }
    }
    Graph sub(keep.size(), std::move(edges), std::move(names));
    if (g.has_labels()) {
        std::vector<std::string> raw;
        raw.reserve(keep.size());
        for (auto i : keep) raw.push_back(g.label_names()[g.labels()[i] - 1]);
        sub.set_raw_labels(raw);
    }
    return sub;
}

Graph filter_by_label(const Graph& g, const std::set<std::string>& excluded) {
    if (!g.has_labels()) throw GraphError("filter_by_label requires a labelled graph");
    std::vector<NodeIndex> keep;
    for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
        if (!excluded.contains(g.label_names()[g.labels()[i] - 1])) keep.push_back(i);
    }
    if (keep.empty()) throw GraphError("label filter removed every node");
    return induced_subgraph(g, keep);
}

Graph drop_smallest_class(const Graph& g) {
    if (!g.has_labels()) throw GraphError("drop_smallest_class requires a labelled graph");
    std::vector<std::size_t> counts(g.num_labels(), 0);
    for (int l : g.labels()) ++counts[l - 1];
    const auto smallest = *std::min_element(counts.begin(), counts.end());
    std::set<std::string> excluded;
    for (int k = 0; k < g.num_labels(); ++k) {
        if (counts[k] == smallest) excluded.insert(g.label_names()[k]);
    }
    return filter_by_label(g, excluded);
}

std::vector<std::size_t> connected_components(const Graph& g) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(g.num_nodes(), unset);
    std::size_t next = 0;
    std::queue<NodeIndex> frontier;
    for (NodeIndex s = 0; s < g.num_nodes(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        frontier.push(s);
        while (!frontier.empty()) {
            auto u = frontier.front();
            frontier.pop();
            for (auto v : g.neighbors(u)) {
                if (comp[v] == unset) {
                    comp[v] = next;
                    frontier.push(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Graph largest_connected_component(const Graph& g) {
    if (g.num_nodes() == 0) throw GraphError("largest_connected_component of an empty graph");
    auto comp = connected_components(g);
    std::size_t count = *std::max_element(comp.begin(), comp.end()) + 1;
    if (count == 1) return g;
    std::vector<std::size_t> sizes(count, 0);
    for (auto c : comp) ++sizes[c];
    // components are numbered by lowest member, so the first maximum wins ties
    auto best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<NodeIndex> keep;
    for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
        if (comp[i] == best) keep.push_back(i);
    }
    return induced_subgraph(g, keep);
}

DegreeInfo degree_info(const Graph& g) {
    DegreeInfo info;
    const auto n = g.num_nodes();
    info.degrees.resize(n);
    for (NodeIndex i = 0; i < n; ++i) info.degrees[i] = g.degree(i);
    if (n == 0) return info;
    info.d_min = *std::min_element(info.degrees.begin(), info.degrees.end());
    info.d_max = *std::max_element(info.degrees.begin(), info.degrees.end());
    info.degree_sum = std::accumulate(info.degrees.begin(), info.degrees.end(), std::size_t{0});
    info.d_bar = static_cast<double>(info.degree_sum) / static_cast<double>(n);
    return info;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const auto& e : g.edges()) os << g.node_name(e.first) << ' ' << g.node_name(e.second) << '\n';
    return os.str();
}

std::string write_labels(const Graph& g) {
    if (!g.has_labels()) throw GraphError("graph has no labels to write");
    std::ostringstream os;
    for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
        os << g.node_name(i) << '\t' << g.label_names()[g.labels()[i] - 1] << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace scoreplus
