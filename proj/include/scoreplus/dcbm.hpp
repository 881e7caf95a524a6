#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "scoreplus/graph.hpp"

namespace scoreplus {

/// theta_i / c_n ~ Pareto(shape alpha, scale beta), support [beta, inf).
struct ParetoSpec {
    double alpha = 5.0;
    double beta = 0.8;
    double c_n = 0.0;

    /// alpha = 5, beta = 4/5, c_n = 3 log(n) / n.
    static ParetoSpec for_size(std::size_t n);
    /// alpha * beta / (alpha - 1)
    double mean() const;
    void validate() const;
};

/// theta_i = c_n * X_i with X_i iid Pareto(alpha, beta).
std::vector<double> sample_theta(std::size_t n, const ParetoSpec& spec, std::uint64_t seed);

/// Contiguous blocks of labels 1..K of size n / K; the last block takes the remainder.
std::vector<int> build_balanced_pi(std::size_t n, int k);

struct DcbmParams {
    std::size_t n = 0;
    int k = 0;
    Eigen::MatrixXd p;           // K x K, symmetric, nonnegative
    std::vector<double> theta;   // positive
    std::vector<int> membership; // 1..K per node

    void validate() const;
    /// Omega_ij = theta_i theta_j P(g_i, g_j), before any clamping.
    double omega(std::size_t i, std::size_t j) const {
        return theta[i] * theta[j] * p(membership[i] - 1, membership[j] - 1);
    }
    /// Dense Omega, for small n only.
    Eigen::MatrixXd omega_matrix() const;
    /// E[d_i] = sum_{j != i} min(Omega_ij, 1)
    std::vector<double> expected_degrees() const;
};

/// P matrices of the two published simulation designs (1 or 2).
Eigen::MatrixXd experiment_p_matrix(int experiment);

/**
 * Parameters for a published simulation design: K = 4, balanced blocks,
 * Pareto degree parameters scaled so that Omega_ij ~ c_n * P, i.e.
 * theta_i = sqrt(c_n) * X_i. With theta_i = c_n * X_i the expected degree is
 * far below 1 at these sizes.
 */
DcbmParams experiment_params(std::size_t n, const Eigen::MatrixXd& p, std::uint64_t seed);

struct SimulatedNetwork {
    Graph graph;                     // labels = membership
    std::size_t clamped_pairs = 0;   // pairs with Omega_ij > 1
};

/// Independent Bernoulli(min(Omega_ij, 1)) edges for i < j.
SimulatedNetwork sample_adjacency(const DcbmParams& params, std::uint64_t seed);

/// Whitespace-separated K x K matrix.
Eigen::MatrixXd parse_p_matrix(std::string_view text);

}  // namespace scoreplus
