#include "scoreplus/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "scoreplus/kmeans.hpp"

namespace scoreplus {

PipelineConfig PipelineConfig::score(int k, std::uint64_t seed) {
    PipelineConfig c;
    c.k = k;
    c.seed = seed;
    return c;
}

PipelineConfig PipelineConfig::score_plus(int k, double delta, double t, std::uint64_t seed) {
    PipelineConfig c;
    c.k = k;
    c.pre_pca = true;
    c.delta = delta;
    c.weight_by_eigenvalue = true;
    c.extra_vector = true;
    c.t = t;
    c.seed = seed;
    return c;
}

void PipelineConfig::validate() const {
    if (k < 2) throw std::invalid_argument("K must be at least 2");
    if (pre_pca && !(delta > 0.0)) throw std::invalid_argument("delta must be positive when pre-PCA normalization is on");
    if (extra_vector && !(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0, 1)");
    if (kmeans_restarts < 1) throw std::invalid_argument("k-means restarts must be positive");
}

std::string PipelineConfig::method_name() const {
    if (pre_pca && weight_by_eigenvalue && extra_vector && post_pca) return "score+";
    if (!pre_pca && !weight_by_eigenvalue && !extra_vector && post_pca) return "score";
    std::string name = "variant(";
    name += pre_pca ? "laplacian" : "adjacency";
    if (weight_by_eigenvalue) name += ",weighted";
    if (extra_vector) name += ",gap-rule";
    if (threshold_ratios) name += ",threshold";
    if (!post_pca) name += ",no-ratio";
    return name + ")";
}

int select_vector_count(double lambda_k, double lambda_k1, double t, int k) {
    if (lambda_k == 0.0) throw std::domain_error("lambda_K is zero: rank-deficient signal");
    return (1.0 - lambda_k1 / lambda_k) <= t ? k + 1 : k;
}

RatioMatrix build_ratio_matrix(const EigenBasis& basis, int m, bool weight_by_eigenvalue, bool threshold_ratios,
                               LeadingEntryPolicy policy) {
    if (m < 2) throw std::invalid_argument("ratio matrix needs M >= 2");
    if (basis.count() < m) throw std::invalid_argument("eigenbasis holds fewer than M pairs");
    const Eigen::Index n = basis.vectors.rows();
    Eigen::VectorXd lead = basis.vectors.col(0);
    const bool clamp = policy == LeadingEntryPolicy::Clamp || threshold_ratios;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(lead[i]) >= kLeadingEntryFloor) continue;
        if (!clamp) {
            throw std::domain_error("leading eigenvector vanishes at node " + std::to_string(i) +
                                    "; cannot form ratios");
        }
        lead[i] = lead[i] < 0.0 ? -kLeadingEntryFloor : kLeadingEntryFloor;
    }
    RatioMatrix r;
    r.values.resize(n, m - 1);
    for (int k = 1; k < m; ++k) {
        const double w = weight_by_eigenvalue ? basis.values[k] / basis.values[0] : 1.0;
        r.values.col(k - 1) = w * basis.vectors.col(k).cwiseQuotient(lead);
    }
    if (threshold_ratios) {
        const double cap = std::log(static_cast<double>(n));
        r.values = r.values.cwiseMax(-cap).cwiseMin(cap);
    }
    return r;
}

EigenBasis pipeline_basis(const Graph& g, const PipelineConfig& config, Eigen::Index count) {
    const SymMatrix m = config.pre_pca ? build_regularized_laplacian(g, config.delta) : adjacency_matrix(g);
    return top_eigenpairs(m, count);
}

Eigen::MatrixXd clustering_features(const EigenBasis& basis, int m, const PipelineConfig& config) {
    if (!config.post_pca) {
        Eigen::MatrixXd eta = basis.vectors.leftCols(m);
        if (config.weight_by_eigenvalue) eta = eta * basis.values.head(m).asDiagonal();
        return eta;
    }
    const auto policy = config.pre_pca ? LeadingEntryPolicy::Reject : LeadingEntryPolicy::Clamp;
    return build_ratio_matrix(basis, m, config.weight_by_eigenvalue, config.threshold_ratios, policy).values;
}

DetectionResult run_pipeline(const Graph& g, const PipelineConfig& config) {
    config.validate();
    const auto n = g.num_nodes();
    if (n <= static_cast<std::size_t>(config.k)) {
        throw std::invalid_argument("graph has " + std::to_string(n) + " nodes; need more than K = " +
                                    std::to_string(config.k));
    }
    if (!is_connected(g)) {
        throw GraphError("graph is disconnected; restrict it to the largest connected component first");
    }

    const int k = config.k;
    EigenBasis basis = pipeline_basis(g, config, k + 1);

    DetectionResult result;
    result.config = config;
    result.eigenvalues = basis.values;
    if (basis.values[k - 1] != 0.0) {
        result.gap = 1.0 - basis.values[k] / basis.values[k - 1];
        result.weak_signal = result.gap <= config.t;
    }
    result.m_used = config.extra_vector ? select_vector_count(basis.values[k - 1], basis.values[k], config.t, k) : k;

    Eigen::MatrixXd features = clustering_features(basis, result.m_used, config);
    KMeansResult km = kmeans(features, k, config.kmeans_restarts, config.seed);
    result.labels = std::move(km.assignment);
    result.kmeans_objective = km.objective;
    result.nonempty_clusters = km.nonempty;
    return result;
}

}  // namespace scoreplus
