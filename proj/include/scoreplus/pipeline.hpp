#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "scoreplus/graph.hpp"
#include "scoreplus/spectral.hpp"

namespace scoreplus {

/**
 * Toggles that span orthodox SCORE (all off) to SCORE+ (pre_pca,
 * weight_by_eigenvalue and extra_vector on). `post_pca = false` clusters the
 * raw leading eigenvectors instead of their ratios, which only exists for
 * ablation runs.
 */
struct PipelineConfig {
    int k = 2;
    bool pre_pca = false;
    double delta = 0.1;
    bool weight_by_eigenvalue = false;
    bool extra_vector = false;
    double t = 0.1;
    bool threshold_ratios = false;
    bool post_pca = true;
    int kmeans_restarts = 100;
    std::uint64_t seed = 0;

    static PipelineConfig score(int k, std::uint64_t seed = 0);
    static PipelineConfig score_plus(int k, double delta = 0.1, double t = 0.1, std::uint64_t seed = 0);

    /// Throws std::invalid_argument on K < 2, delta <= 0 with pre_pca, t outside (0, 1), restarts < 1.
    void validate() const;
    std::string method_name() const;
};

struct RatioMatrix {
    Eigen::MatrixXd values;  // n x (M - 1)

    Eigen::Index rows() const noexcept { return values.rows(); }
    Eigen::Index cols() const noexcept { return values.cols(); }
};

/// What to do when |xi_1(i)| < 1e-12.
enum class LeadingEntryPolicy {
    Reject,  ///< throw, unless thresholding is on (then clamp)
    Clamp,   ///< replace by sign(xi_1(i)) * 1e-12
};

inline constexpr double kLeadingEntryFloor = 1e-12;

/// K + 1 when 1 - lambda_{K+1}/lambda_K <= t (signed ratio), else K.
int select_vector_count(double lambda_k, double lambda_k1, double t, int k);

/// Column k-1 holds (lambda_k/lambda_1)(xi_k/xi_1) when weighted, xi_k/xi_1 otherwise,
/// for k = 2..M. Optional clipping to [-log n, log n].
RatioMatrix build_ratio_matrix(const EigenBasis& basis, int m, bool weight_by_eigenvalue, bool threshold_ratios,
                               LeadingEntryPolicy policy = LeadingEntryPolicy::Reject);

struct DetectionResult {
    std::vector<int> labels;  // 1..K
    int m_used = 0;
    /// Leading K+1 eigenvalues of the matrix that was decomposed.
    Eigen::VectorXd eigenvalues;
    /// 1 - lambda_{K+1}/lambda_K on those eigenvalues.
    double gap = 0.0;
    /// gap <= t; only acted upon when extra_vector is set.
    bool weak_signal = false;
    double kmeans_objective = 0.0;
    int nonempty_clusters = 0;
    PipelineConfig config;
};

/// Requires a connected graph with more than K nodes.
DetectionResult run_pipeline(const Graph& g, const PipelineConfig& config);

/// The decomposition stage of run_pipeline, exposed for diagnostics and tests.
EigenBasis pipeline_basis(const Graph& g, const PipelineConfig& config, Eigen::Index count);

/// Rows fed to k-means, given an eigenbasis and the number of vectors in use.
Eigen::MatrixXd clustering_features(const EigenBasis& basis, int m, const PipelineConfig& config);

}  // namespace scoreplus
