#include "scoreplus/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scoreplus {

LabelVector::LabelVector(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {
    int top = 0;
    for (int l : labels_) {
        if (l < 1) throw std::invalid_argument("labels must be >= 1");
        top = std::max(top, l);
    }
    if (k_ == 0) k_ = top;
    if (top > k_) throw std::invalid_argument("label exceeds the declared alphabet size");
}

std::vector<std::vector<std::size_t>> LabelVector::class_sets() const {
    std::vector<std::vector<std::size_t>> sets(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < labels_.size(); ++i) sets[static_cast<std::size_t>(labels_[i] - 1)].push_back(i);
    return sets;
}

namespace {

void check_lengths(const LabelVector& a, const LabelVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("label vectors differ in length (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

int alphabet(const LabelVector& est, const LabelVector& truth) {
    return std::max(est.num_classes(), truth.num_classes());
}

}  // namespace

Eigen::MatrixXi confusion_matrix(const LabelVector& est, const LabelVector& truth, int k) {
    check_lengths(est, truth);
    Eigen::MatrixXi c = Eigen::MatrixXi::Zero(k, k);
    for (std::size_t i = 0; i < est.size(); ++i) ++c(est[i] - 1, truth[i] - 1);
    return c;
}

std::size_t mismatch_exhaustive(const LabelVector& est, const LabelVector& truth) {
    const int k = alphabet(est, truth);
    const Eigen::MatrixXi c = confusion_matrix(est, truth, k);
    std::vector<int> tau(static_cast<std::size_t>(k));
    std::iota(tau.begin(), tau.end(), 0);
    long best = 0;
    do {
        long matched = 0;
        for (int e = 0; e < k; ++e) matched += c(e, tau[static_cast<std::size_t>(e)]);
        best = std::max(best, matched);
    } while (std::next_permutation(tau.begin(), tau.end()));
    return est.size() - static_cast<std::size_t>(best);
}

std::vector<int> hungarian_min_cost(const Eigen::MatrixXd& cost) {
    // Shortest augmenting path with row/column potentials, O(k^3).
    const int n = static_cast<int>(cost.rows());
    if (cost.cols() != n) throw std::invalid_argument("Hungarian assignment needs a square matrix");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) row_to_col[static_cast<std::size_t>(p[j] - 1)] = j - 1;
    return row_to_col;
}

std::size_t mismatch_hungarian(const LabelVector& est, const LabelVector& truth) {
    const int k = alphabet(est, truth);
    const Eigen::MatrixXi c = confusion_matrix(est, truth, k);
    const std::vector<int> tau = hungarian_min_cost(-c.cast<double>());
    long matched = 0;
    for (int e = 0; e < k; ++e) matched += c(e, tau[static_cast<std::size_t>(e)]);
    return est.size() - static_cast<std::size_t>(matched);
}

ErrorRate error_rate(const LabelVector& est, const LabelVector& truth) {
    check_lengths(est, truth);
    ErrorRate r;
    if (est.size() == 0) return r;
    r.count = alphabet(est, truth) <= 8 ? mismatch_exhaustive(est, truth) : mismatch_hungarian(est, truth);
    r.rate = static_cast<double>(r.count) / static_cast<double>(est.size());
    return r;
}

VarianceDecomposition variance_decomposition(const Eigen::VectorXd& x, const LabelVector& truth) {
    if (static_cast<std::size_t>(x.size()) != truth.size()) {
        throw std::invalid_argument("vector length does not match label count");
    }
    VarianceDecomposition d;
    if (x.size() == 0) return d;
    const double mean = x.mean();
    d.total = (x.array() - mean).square().sum();
    for (const auto& set : truth.class_sets()) {
        if (set.empty()) continue;
        double class_mean = 0.0;
        for (auto i : set) class_mean += x[static_cast<Eigen::Index>(i)];
        class_mean /= static_cast<double>(set.size());
        for (auto i : set) {
            const double r = x[static_cast<Eigen::Index>(i)] - class_mean;
            d.within += r * r;
        }
        d.between += static_cast<double>(set.size()) * (class_mean - mean) * (class_mean - mean);
    }
    return d;
}

double rayleigh_quotient(const Eigen::VectorXd& x, const LabelVector& truth) {
    const auto d = variance_decomposition(x, truth);
    if (d.total < 1e-24) return 0.0;
    return std::clamp(d.between / d.total, 0.0, 1.0);
}

double gap_statistic(double lambda_k, double lambda_k1) {
    if (lambda_k == 0.0) throw std::domain_error("lambda_K is zero; gap statistic undefined");
    return 1.0 - lambda_k1 / lambda_k;
}

double gap_statistic(const EigenBasis& basis, int k) {
    if (k < 1 || basis.count() < k + 1) throw std::invalid_argument("gap statistic needs K + 1 eigenvalues");
    return gap_statistic(basis.values[k - 1], basis.values[k]);
}

std::string ScreeReport::to_tsv() const {
    std::ostringstream os;
    os << "index\tabs_eigen_adjacency\trq_adjacency\tabs_eigen_laplacian\trq_laplacian\n";
    os << std::setprecision(10);
    for (const auto& r : rows) {
        os << r.index << '\t' << r.abs_eigen_adjacency << '\t' << r.rq_adjacency << '\t' << r.abs_eigen_laplacian
           << '\t' << r.rq_laplacian << '\n';
    }
    return os.str();
}

ScreeReport scree_and_rq_report(const Graph& g, int k, double delta, int depth) {
    if (!g.has_labels()) throw std::invalid_argument("scree/RQ report needs ground-truth labels");
    if (depth < 1) throw std::invalid_argument("depth must be positive");
    const int n = static_cast<int>(g.num_nodes());
    depth = std::min(depth, n);
    const LabelVector truth(g.labels(), g.num_labels());
    const EigenBasis a = top_eigenpairs(adjacency_matrix(g), depth);
    const EigenBasis l = top_eigenpairs(build_regularized_laplacian(g, delta), depth);

    ScreeReport report;
    report.k = k;
    report.delta = delta;
    for (int i = 0; i < depth; ++i) {
        ScreeRow row;
        row.index = i + 1;
        row.abs_eigen_adjacency = std::abs(a.values[i]);
        row.rq_adjacency = rayleigh_quotient(a.vectors.col(i), truth);
        row.abs_eigen_laplacian = std::abs(l.values[i]);
        row.rq_laplacian = rayleigh_quotient(l.vectors.col(i), truth);
        report.rows.push_back(row);
    }
    if (depth >= k + 1) {
        report.gap_adjacency = gap_statistic(a, k);
        report.gap_laplacian = gap_statistic(l, k);
    }
    return report;
}

}  // namespace scoreplus
