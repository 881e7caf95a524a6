#pragma once
// Brute-force reference implementations used only by the tests. None of these
// share code with the library.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
/// Returns (values, vectors) sorted by |value| descending, positive first on ties.
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> jacobi_eigen(Eigen::MatrixXd a) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30 * std::max(1.0, a.squaredNorm())) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        const double ax = std::abs(a(x, x)), ay = std::abs(a(y, y));
        if (std::abs(ax - ay) > 1e-12 * std::max(1.0, ax)) return ax > ay;
        return a(x, x) > a(y, y);
    });
    Eigen::VectorXd values(n);
    Eigen::MatrixXd vectors(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
        vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
    }
    return {values, vectors};
}

/// Minimum k-means objective over every assignment of rows to k labels.
inline double best_partition_objective(const Eigen::MatrixXd& x, int k) {
    const auto n = static_cast<int>(x.rows());
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        double obj = 0.0;
        for (int c = 0; c < k; ++c) {
            Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(x.cols());
            int count = 0;
            for (int i = 0; i < n; ++i)
                if (label[static_cast<std::size_t>(i)] == c) mean += x.row(i), ++count;
            if (count == 0) continue;
            mean /= count;
            for (int i = 0; i < n; ++i)
                if (label[static_cast<std::size_t>(i)] == c) obj += (x.row(i) - mean).squaredNorm();
        }
        best = std::min(best, obj);
        int pos = 0;
        while (pos < n && ++label[static_cast<std::size_t>(pos)] == k) label[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    return best;
}

/// Lloyd iteration from given centres until the assignment repeats; returns the objective.
inline double lloyd_from(const Eigen::MatrixXd& x, Eigen::MatrixXd centers) {
    const Eigen::Index n = x.rows(), k = centers.rows();
    std::vector<Eigen::Index> prev(static_cast<std::size_t>(n), -1), cur(static_cast<std::size_t>(n));
    for (int it = 0; it < 1000; ++it) {
        double obj = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            Eigen::Index arg = 0;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index c = 0; c < k; ++c) {
                const double d = (x.row(i) - centers.row(c)).squaredNorm();
                if (d < best) best = d, arg = c;
            }
            cur[static_cast<std::size_t>(i)] = arg;
            obj += best;
        }
        if (cur == prev) return obj;
        prev = cur;
        for (Eigen::Index c = 0; c < k; ++c) {
            Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(x.cols());
            int count = 0;
            for (Eigen::Index i = 0; i < n; ++i)
                if (cur[static_cast<std::size_t>(i)] == c) sum += x.row(i), ++count;
            if (count > 0) centers.row(c) = sum / count;
        }
    }
    return std::numeric_limits<double>::infinity();
}

/// Best objective Lloyd can reach from any ordered choice of k distinct data points as seeds.
inline double best_seeded_lloyd_objective(const Eigen::MatrixXd& x, int k) {
    const auto n = static_cast<int>(x.rows());
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        bool distinct = true;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) distinct = distinct && idx[static_cast<std::size_t>(a)] != idx[static_cast<std::size_t>(b)];
        if (distinct) {
            Eigen::MatrixXd c(k, x.cols());
            for (int a = 0; a < k; ++a) c.row(a) = x.row(idx[static_cast<std::size_t>(a)]);
            best = std::min(best, lloyd_from(x, c));
        }
        int pos = 0;
        while (pos < k && ++idx[static_cast<std::size_t>(pos)] == n) idx[static_cast<std::size_t>(pos++)] = 0;
        if (pos == k) break;
    }
    return best;
}

/// min over label permutations of the mismatch count, labels in 1..k.
inline std::size_t brute_mismatch(const std::vector<int>& est, const std::vector<int>& truth, int k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    std::size_t best = est.size();
    do {
        std::size_t miss = 0;
        for (std::size_t i = 0; i < est.size(); ++i) miss += perm[static_cast<std::size_t>(est[i] - 1)] != truth[i];
        best = std::min(best, miss);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Size of the largest connected component by breadth-first search.
inline std::size_t largest_component_size(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(n, false);
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::size_t size = 0;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            ++size;
            for (auto w : adj[u])
                if (!seen[w]) seen[w] = true, q.push(w);
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace oracle
