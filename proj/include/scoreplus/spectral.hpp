#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scoreplus/graph.hpp"

namespace scoreplus {

/// Sparse real symmetric matrix. Symmetry is checked exactly on construction.
class SymMatrix {
public:
    using Sparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

    SymMatrix() = default;
    explicit SymMatrix(Sparse m);
    static SymMatrix from_dense(const Eigen::MatrixXd& m);

    Eigen::Index size() const noexcept { return m_.rows(); }
    double coeff(Eigen::Index i, Eigen::Index j) const { return m_.coeff(i, j); }
    Eigen::VectorXd multiply(const Eigen::VectorXd& x) const { return m_ * x; }
    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(m_); }
    const Sparse& sparse() const noexcept { return m_; }

private:
    Sparse m_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// (D + delta*d_max*I)^{-1/2} A (D + delta*d_max*I)^{-1/2}.
/// delta = 0 is allowed only when every node has positive degree.
SymMatrix build_regularized_laplacian(const Graph& g, double delta);

/// Leading eigenpairs ordered by |value| descending; equal magnitudes put the
/// positive value first. Each vector has unit norm and its largest-|entry|
/// component (lowest index on ties) is positive.
struct EigenBasis {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // n x count

    Eigen::Index count() const noexcept { return values.size(); }
    Eigen::VectorXd vector(Eigen::Index k) const { return vectors.col(k); }
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

struct EigenOptions {
    /// Problems up to this size go to the dense symmetric solver.
    Eigen::Index dense_cutoff = 512;
    /// Relative residual target, scaled by the largest |eigenvalue|.
    double tolerance = 1e-10;
    /// Iteration cap as a multiple of n.
    int max_iterations_factor = 10;
    std::uint64_t start_seed = 0x5C0E5EEDULL;
};

EigenBasis top_eigenpairs(const SymMatrix& m, Eigen::Index count, const EigenOptions& options = {});

/// Lanczos with full reorthogonalization; used by top_eigenpairs above the dense cutoff.
EigenBasis lanczos_eigenpairs(const SymMatrix& m, Eigen::Index count, const EigenOptions& options = {});

/// Dense path: every eigenpair of a symmetric matrix, then the same ordering and sign rules.
EigenBasis dense_eigenpairs(const Eigen::MatrixXd& m, Eigen::Index count);

/// max_k ||M x_k - lambda_k x_k||
double max_residual(const SymMatrix& m, const EigenBasis& basis);

}  // namespace scoreplus
