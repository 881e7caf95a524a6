#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "scoreplus/graph.hpp"
#include "scoreplus/spectral.hpp"

namespace scoreplus {

/// Labels in 1..K with derived class sets S_k.
class LabelVector {
public:
    LabelVector() = default;
    /// k = 0 infers K from the largest label.
    explicit LabelVector(std::vector<int> labels, int k = 0);

    std::size_t size() const noexcept { return labels_.size(); }
    int num_classes() const noexcept { return k_; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int operator[](std::size_t i) const { return labels_[i]; }
    /// S_1..S_K as 0-based node index lists.
    std::vector<std::vector<std::size_t>> class_sets() const;

private:
    std::vector<int> labels_;
    int k_ = 0;
};

struct ErrorRate {
    std::size_t count = 0;
    double rate = 0.0;
};

/// Row = estimated label, column = true label.
Eigen::MatrixXi confusion_matrix(const LabelVector& est, const LabelVector& truth, int k);

/// Minimum over permutations tau of #{i : tau(est_i) != truth_i}, by enumeration.
std::size_t mismatch_exhaustive(const LabelVector& est, const LabelVector& truth);
/// Same quantity through a maximum-weight assignment on the confusion matrix.
std::size_t mismatch_hungarian(const LabelVector& est, const LabelVector& truth);

/// Enumeration for K <= 8, Hungarian assignment above.
ErrorRate error_rate(const LabelVector& est, const LabelVector& truth);

/// Column permutation of a square cost matrix with minimum total cost.
std::vector<int> hungarian_min_cost(const Eigen::MatrixXd& cost);

struct VarianceDecomposition {
    double total = 0.0;
    double within = 0.0;
    double between = 0.0;
};

VarianceDecomposition variance_decomposition(const Eigen::VectorXd& x, const LabelVector& truth);

/// Between / Total, or 0 when Total < 1e-24.
double rayleigh_quotient(const Eigen::VectorXd& x, const LabelVector& truth);

/// 1 - lambda_{K+1} / lambda_K on magnitude-ordered signed eigenvalues.
double gap_statistic(const EigenBasis& basis, int k);
double gap_statistic(double lambda_k, double lambda_k1);

struct ScreeRow {
    int index = 0;  // 1-based eigenvector index
    double abs_eigen_adjacency = 0.0;
    double rq_adjacency = 0.0;
    double abs_eigen_laplacian = 0.0;
    double rq_laplacian = 0.0;
};

struct ScreeReport {
    int k = 0;
    double delta = 0.0;
    std::vector<ScreeRow> rows;
    double gap_adjacency = 0.0;
    double gap_laplacian = 0.0;

    /// Tab-separated plot data with a header line.
    std::string to_tsv() const;
};

/// |lambda_k| and Q(xi_k), k = 1..depth, for A and L_delta. depth is clipped to n;
/// the gap columns need depth >= K + 1 and are left at 0 otherwise.
ScreeReport scree_and_rq_report(const Graph& g, int k, double delta, int depth);

}  // namespace scoreplus
