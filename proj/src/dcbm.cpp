#include "scoreplus/dcbm.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "scoreplus/rng.hpp"

namespace scoreplus {

ParetoSpec ParetoSpec::for_size(std::size_t n) {
    if (n < 2) throw std::invalid_argument("c_n = 3 log(n)/n needs n >= 2");
    ParetoSpec spec;
    const double nd = static_cast<double>(n);
    spec.c_n = 3.0 * std::log(nd) / nd;
    return spec;
}

double ParetoSpec::mean() const { return alpha * beta / (alpha - 1.0); }

void ParetoSpec::validate() const {
    if (!(alpha > 1.0)) throw std::invalid_argument("Pareto shape must exceed 1");
    if (!(beta > 0.0)) throw std::invalid_argument("Pareto scale must be positive");
    if (!(c_n > 0.0)) throw std::invalid_argument("c_n must be positive");
}

std::vector<double> sample_theta(std::size_t n, const ParetoSpec& spec, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_theta needs n >= 1");
    spec.validate();
    Rng rng = Rng::stream(seed, 0);
    std::vector<double> theta(n);
    for (auto& t : theta) t = spec.c_n * rng.pareto(spec.alpha, spec.beta);
    return theta;
}

std::vector<int> build_balanced_pi(std::size_t n, int k) {
    if (k < 1) throw std::invalid_argument("K must be positive");
    if (static_cast<std::size_t>(k) > n) throw std::invalid_argument("K exceeds n");
    const std::size_t block = n / static_cast<std::size_t>(k);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<int>(std::min<std::size_t>(i / block, static_cast<std::size_t>(k - 1))) + 1;
    }
    return labels;
}

void DcbmParams::validate() const {
    if (n < 1 || k < 1) throw std::invalid_argument("DCBM needs n >= 1 and K >= 1");
    if (p.rows() != k || p.cols() != k) throw std::invalid_argument("P must be K x K");
    if (!p.allFinite() || (p.array() < 0.0).any()) throw std::invalid_argument("P entries must be finite and >= 0");
    if (!(p - p.transpose()).isZero(0.0)) throw std::invalid_argument("P must be symmetric");
    if (theta.size() != n || membership.size() != n) throw std::invalid_argument("theta and membership need n entries");
    for (double t : theta) {
        if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("theta entries must be positive");
    }
    for (int g : membership) {
        if (g < 1 || g > k) throw std::invalid_argument("membership out of range 1..K");
    }
}

Eigen::MatrixXd DcbmParams::omega_matrix() const {
    Eigen::MatrixXd om(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) om(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = omega(i, j);
    }
    return om;
}

std::vector<double> DcbmParams::expected_degrees() const {
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double q = std::min(omega(i, j), 1.0);
            d[i] += q;
            d[j] += q;
        }
    }
    return d;
}

Eigen::MatrixXd experiment_p_matrix(int experiment) {
    Eigen::MatrixXd p(4, 4);
    switch (experiment) {
        case 1:
            p << 1.0, 0.5, 0.5, 0.5,
                 0.5, 1.0, 0.5, 0.5,
                 0.5, 0.5, 1.0, 0.5,
                 0.5, 0.5, 0.5, 1.0;
            return p;
        case 2:
            p << 1.0, 2.0 / 3.0, 0.1, 0.1,
                 2.0 / 3.0, 1.0, 0.5, 0.5,
                 0.1, 0.5, 1.0, 0.5,
                 0.1, 0.5, 0.5, 1.0;
            return p;
        default:
            throw std::invalid_argument("unknown experiment " + std::to_string(experiment) + " (expected 1 or 2)");
    }
}

DcbmParams experiment_params(std::size_t n, const Eigen::MatrixXd& p, std::uint64_t seed) {
    DcbmParams params;
    params.n = n;
    params.k = static_cast<int>(p.rows());
    params.p = p;
    params.membership = build_balanced_pi(n, params.k);
    const ParetoSpec spec = ParetoSpec::for_size(n);
    params.theta = sample_theta(n, spec, seed);
    const double rescale = 1.0 / std::sqrt(spec.c_n);  // c_n X_i -> sqrt(c_n) X_i
    for (auto& t : params.theta) t *= rescale;
    params.validate();
    return params;
}

SimulatedNetwork sample_adjacency(const DcbmParams& params, std::uint64_t seed) {
    params.validate();
    Rng rng = Rng::stream(seed, 1);
    SimulatedNetwork out;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < params.n; ++i) {
        for (std::size_t j = i + 1; j < params.n; ++j) {
            double q = params.omega(i, j);
            if (q > 1.0) {
                ++out.clamped_pairs;
                q = 1.0;
            }
            if (rng.uniform() < q) edges.push_back({i, j});
        }
    }
    std::vector<std::string> names(params.n);
    for (std::size_t i = 0; i < params.n; ++i) names[i] = std::to_string(i + 1);
    out.graph = Graph(params.n, std::move(edges), std::move(names));
    std::vector<std::string> label_names(static_cast<std::size_t>(params.k));
    for (int c = 0; c < params.k; ++c) label_names[static_cast<std::size_t>(c)] = std::to_string(c + 1);
    out.graph.set_labels(params.membership, std::move(label_names));
    return out;
}

Eigen::MatrixXd parse_p_matrix(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream ls(line);
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError("not a number: '" + tok + "'", lineno);
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const auto k = rows.size();
    if (k == 0) throw ParseError("empty P matrix", 0);
    Eigen::MatrixXd p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t r = 0; r < k; ++r) {
        if (rows[r].size() != k) throw ParseError("P matrix row " + std::to_string(r + 1) + " has wrong length", 0);
        for (std::size_t c = 0; c < k; ++c) p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    if (!(p - p.transpose()).isZero(0.0)) throw ParseError("P matrix is not symmetric", 0);
    if ((p.array() < 0.0).any()) throw ParseError("P matrix has negative entries", 0);
    return p;
}

}  // namespace scoreplus
