#include "scoreplus/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "scoreplus/rng.hpp"

namespace scoreplus {

SymMatrix::SymMatrix(Sparse m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SymMatrix must be square");
    m_.makeCompressed();
    Sparse t = m_.transpose();
    for (Eigen::Index i = 0; i < m_.outerSize(); ++i) {
        Sparse::InnerIterator a(m_, i);
        Sparse::InnerIterator b(t, i);
        for (; a && b; ++a, ++b) {
            if (a.index() != b.index() || a.value() != b.value()) {
                throw std::invalid_argument("matrix is not exactly symmetric");
            }
        }
        if (a || b) throw std::invalid_argument("matrix is not exactly symmetric");
    }
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& m) {
    return SymMatrix(Sparse(m.sparseView()));
}

SymMatrix adjacency_matrix(const Graph& g) {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(2 * g.num_edges());
    for (const auto& e : g.edges()) {
        triplets.emplace_back(static_cast<int>(e.first), static_cast<int>(e.second), 1.0);
        triplets.emplace_back(static_cast<int>(e.second), static_cast<int>(e.first), 1.0);
    }
    const auto n = static_cast<Eigen::Index>(g.num_nodes());
    SymMatrix::Sparse a(n, n);
    a.setFromTriplets(triplets.begin(), triplets.end());
    return SymMatrix(std::move(a));
}

SymMatrix build_regularized_laplacian(const Graph& g, double delta) {
    const auto n = g.num_nodes();
    if (n == 0) throw std::invalid_argument("regularized Laplacian of an empty graph");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be a finite value >= 0");
    std::size_t d_max = 0;
    for (NodeIndex i = 0; i < n; ++i) d_max = std::max(d_max, g.degree(i));
    const double ridge = delta * static_cast<double>(d_max);
    std::vector<double> scale(n);
    for (NodeIndex i = 0; i < n; ++i) {
        const double h = static_cast<double>(g.degree(i)) + ridge;
        if (h <= 0.0) {
            throw std::domain_error("division by zero: node " + g.node_name(i) +
                                    " has degree 0 and the ridge term is 0");
        }
        scale[i] = 1.0 / std::sqrt(h);
    }
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(2 * g.num_edges());
    for (const auto& e : g.edges()) {
        // same expression for both orientations keeps the matrix bitwise symmetric
        const double v = scale[e.first] * scale[e.second];
        triplets.emplace_back(static_cast<int>(e.first), static_cast<int>(e.second), v);
        triplets.emplace_back(static_cast<int>(e.second), static_cast<int>(e.first), v);
    }
    SymMatrix::Sparse l(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    l.setFromTriplets(triplets.begin(), triplets.end());
    return SymMatrix(std::move(l));
}

namespace {

// Order candidate indices by |value| descending, positive first on magnitude ties,
// then by candidate index.
std::vector<Eigen::Index> magnitude_order(const Eigen::VectorXd& values) {
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(values.size()));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(values[a]) > std::abs(values[b]);
    });
    const double scale = values.size() ? std::abs(values[idx.front()]) : 0.0;
    const double tie = 1e-12 * std::max(scale, 1.0);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const double a = values[idx[k - 1]];
        const double b = values[idx[k]];
        if (std::abs(std::abs(a) - std::abs(b)) <= tie && a < 0.0 && b > 0.0) std::swap(idx[k - 1], idx[k]);
    }
    return idx;
}

void normalize_signs(Eigen::MatrixXd& vectors) {
    for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
        auto col = vectors.col(k);
        const double top = col.cwiseAbs().maxCoeff();
        const double cut = top * (1.0 - 1e-12);
        for (Eigen::Index i = 0; i < col.size(); ++i) {
            if (std::abs(col[i]) >= cut) {
                if (col[i] < 0.0) col *= -1.0;
                break;
            }
        }
    }
}

EigenBasis select(const Eigen::VectorXd& values, const Eigen::MatrixXd& vectors, Eigen::Index count) {
    auto order = magnitude_order(values);
    EigenBasis basis;
    basis.values.resize(count);
    basis.vectors.resize(vectors.rows(), count);
    for (Eigen::Index k = 0; k < count; ++k) {
        basis.values[k] = values[order[static_cast<std::size_t>(k)]];
        basis.vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]).normalized();
    }
    normalize_signs(basis.vectors);
    return basis;
}

void check_count(Eigen::Index n, Eigen::Index count) {
    if (count < 1 || count > n) {
        throw std::invalid_argument("requested " + std::to_string(count) + " eigenpairs of a " + std::to_string(n) +
                                    "x" + std::to_string(n) + " matrix");
    }
}

Eigen::VectorXd random_unit(Eigen::Index n, Rng& rng) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform() - 0.5;
    return v.normalized();
}

}  // namespace

EigenBasis dense_eigenpairs(const Eigen::MatrixXd& m, Eigen::Index count) {
    check_count(m.rows(), count);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", -1.0);
    return select(solver.eigenvalues(), solver.eigenvectors(), count);
}

double max_residual(const SymMatrix& m, const EigenBasis& basis) {
    double worst = 0.0;
    for (Eigen::Index k = 0; k < basis.count(); ++k) {
        Eigen::VectorXd x = basis.vectors.col(k);
        worst = std::max(worst, (m.multiply(x) - basis.values[k] * x).norm());
    }
    return worst;
}

EigenBasis lanczos_eigenpairs(const SymMatrix& m, Eigen::Index count, const EigenOptions& options) {
    const Eigen::Index n = m.size();
    check_count(n, count);
    const Eigen::Index max_steps = std::min<Eigen::Index>(n, static_cast<Eigen::Index>(options.max_iterations_factor) * n);
    const Eigen::Index min_steps = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * count + 10, 20));

    Rng rng(options.start_seed);
    Eigen::MatrixXd basis(n, std::min<Eigen::Index>(n, std::max<Eigen::Index>(64, 4 * count)));
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[j] couples basis vectors j and j+1
    basis.col(0) = random_unit(n, rng);

    double achieved = std::numeric_limits<double>::infinity();
    Eigen::Index next_check = min_steps;

    for (Eigen::Index j = 0; j < max_steps; ++j) {
        Eigen::VectorXd w = m.multiply(basis.col(j));
        const double a = basis.col(j).dot(w);
        alpha.push_back(a);
        w -= a * basis.col(j);
        if (j > 0) w -= beta[static_cast<std::size_t>(j - 1)] * basis.col(j - 1);
        for (int pass = 0; pass < 2; ++pass) {
            auto v = basis.leftCols(j + 1);
            w -= v * (v.transpose() * w);
        }
        double b = w.norm();
        const Eigen::Index steps = j + 1;
        const bool exhausted = steps == n;

        if (!exhausted) {
            if (basis.cols() <= steps) basis.conservativeResize(Eigen::NoChange, std::min(n, 2 * basis.cols()));
            const double scale = std::max(std::abs(a), 1.0);
            if (b <= 1e-12 * scale) {
                // invariant subspace: continue from a fresh direction orthogonal to the basis
                Eigen::VectorXd fresh = random_unit(n, rng);
                for (int pass = 0; pass < 2; ++pass) {
                    auto v = basis.leftCols(steps);
                    fresh -= v * (v.transpose() * fresh);
                }
                b = 0.0;
                basis.col(steps) = fresh.normalized();
            } else {
                basis.col(steps) = w / b;
            }
        }
        beta.push_back(b);

        if (steps < count || (!exhausted && steps < next_check)) continue;
        next_check = steps + std::max<Eigen::Index>(5, steps / 10);

        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), steps);
        Eigen::VectorXd sub(std::max<Eigen::Index>(steps - 1, 0));
        for (Eigen::Index k = 0; k + 1 < steps; ++k) sub[k] = beta[static_cast<std::size_t>(k)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        if (tri.info() != Eigen::Success) continue;
        const auto& theta = tri.eigenvalues();
        const auto& s = tri.eigenvectors();
        auto order = magnitude_order(theta);
        const double top = std::abs(theta[order.front()]);
        bool converged = true;
        for (Eigen::Index k = 0; k < count; ++k) {
            const double est = std::abs(b * s(steps - 1, order[static_cast<std::size_t>(k)]));
            if (!exhausted && est > options.tolerance * std::max(top, 1e-300)) {
                converged = false;
                break;
            }
        }
        if (!converged) continue;

        Eigen::MatrixXd ritz = basis.leftCols(steps) * s;
        EigenBasis result = select(theta, ritz, count);
        achieved = max_residual(m, result);
        if (achieved <= 1e-8 * (std::abs(result.values[0]) + 1.0)) return result;
        if (exhausted) break;
    }
    throw ConvergenceError("Lanczos did not converge; achieved residual " + std::to_string(achieved), achieved);
}

EigenBasis top_eigenpairs(const SymMatrix& m, Eigen::Index count, const EigenOptions& options) {
    check_count(m.size(), count);
    if (m.size() <= options.dense_cutoff) return dense_eigenpairs(m.dense(), count);
    return lanczos_eigenpairs(m, count, options);
}

}  // namespace scoreplus
