#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle/oracles.hpp"
#include "scoreplus/graph.hpp"
#include "scoreplus/spectral.hpp"

using namespace scoreplus;

namespace {

Graph random_graph(std::mt19937_64& gen, std::size_t n, double p) {
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (u(gen) < p) edges.push_back({i, j});
    return largest_connected_component(Graph(n, edges));
}

// Largest-|entry| component positive, first index on ties.
Eigen::VectorXd oracle_sign(Eigen::VectorXd v) {
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(arg)) + 1e-12) arg = i;
    return v(arg) < 0 ? Eigen::VectorXd(-v) : v;
}

void check_against_oracle(const SymMatrix& m, const EigenBasis& basis, double tol) {
    const auto [values, vectors] = oracle::jacobi_eigen(m.dense());
    const Eigen::Index count = basis.count();
    const double scale = std::abs(values(0)) + 1.0;
    for (Eigen::Index k = 0; k < count; ++k) {
        CHECK(std::abs(basis.values(k) - values(k)) <= tol * scale);
        // vectors are only identifiable for isolated eigenvalues
        bool isolated = true;
        for (Eigen::Index j = 0; j < values.size(); ++j)
            if (j != k && std::abs(values(j) - values(k)) < 1e-6) isolated = false;
        if (isolated) {
            const Eigen::VectorXd ref = oracle_sign(vectors.col(k));
            CHECK((basis.vectors.col(k) - ref).norm() <= 1e-6);
        }
    }
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("regularized Laplacian entries") {
    const Graph single(2, {{0, 1}});
    CHECK(build_regularized_laplacian(single, 0.0).coeff(0, 1) == doctest::Approx(1.0));

    const Graph path(3, {{0, 1}, {1, 2}});
    const SymMatrix l = build_regularized_laplacian(path, 0.1);
    CHECK(l.coeff(0, 1) == doctest::Approx(0.61546).epsilon(1e-5));
    CHECK(l.coeff(0, 1) == doctest::Approx(1.0 / std::sqrt(1.2 * 2.2)).epsilon(1e-14));
    CHECK(l.coeff(0, 2) == 0.0);
    CHECK(l.coeff(1, 0) == l.coeff(0, 1));
}

TEST_CASE("regularized Laplacian rejects bad input") {
    const Graph path(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(build_regularized_laplacian(path, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(build_regularized_laplacian(path, std::nan("")), std::invalid_argument);
    const Graph with_isolated(3, {{0, 1}});
    CHECK_THROWS_AS(build_regularized_laplacian(with_isolated, 0.0), std::domain_error);
    CHECK_NOTHROW(build_regularized_laplacian(with_isolated, 0.1));
}

TEST_CASE("symmetric matrix must be symmetric") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 2, 0;
    CHECK_THROWS(SymMatrix::from_dense(m));
}

TEST_CASE("ordering by magnitude with positive first on ties") {
    Eigen::MatrixXd d = Eigen::Vector3d(1, -2, 3).asDiagonal();
    const EigenBasis b = top_eigenpairs(SymMatrix::from_dense(d), 3);
    CHECK(b.values(0) == doctest::Approx(3));
    CHECK(b.values(1) == doctest::Approx(-2));
    CHECK(b.values(2) == doctest::Approx(1));

    const EigenBasis e = top_eigenpairs(adjacency_matrix(Graph(2, {{0, 1}})), 2);
    CHECK(e.values(0) == doctest::Approx(1));
    CHECK(e.values(1) == doctest::Approx(-1));
}

TEST_CASE("sign rule: largest-magnitude entry positive") {
    std::mt19937_64 gen(3);
    const Graph g = random_graph(gen, 60, 0.1);
    const EigenBasis b = top_eigenpairs(adjacency_matrix(g), 5);
    for (Eigen::Index k = 0; k < b.count(); ++k) {
        Eigen::Index arg;
        b.vectors.col(k).cwiseAbs().maxCoeff(&arg);
        CHECK(b.vectors(arg, k) > 0);
        CHECK(b.vectors.col(k).norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("noiseless rank-2 mean matrix") {
    Eigen::MatrixXd omega(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) omega(i, j) = (i < 3) == (j < 3) ? 1.0 : 0.5;
    const EigenBasis b = top_eigenpairs(SymMatrix::from_dense(omega), 3);
    CHECK(b.values(0) == doctest::Approx(4.5));
    CHECK(b.values(1) == doctest::Approx(1.5));
    CHECK(std::abs(b.values(2)) < 1e-10);
    const auto [ref, vecs] = oracle::jacobi_eigen(omega);
    CHECK(std::abs(ref(2)) < 1e-10);
}

TEST_CASE("Lanczos agrees with the Jacobi oracle (n <= 200)") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 20 + gen() % 181;
        const Graph g = random_graph(gen, n, 6.0 / static_cast<double>(n));
        if (g.num_nodes() < 12) continue;
        const Eigen::Index count = 6;
        EigenOptions opt;
        opt.dense_cutoff = 0;  // force the iterative path
        for (const SymMatrix& m : {adjacency_matrix(g), build_regularized_laplacian(g, 0.1)}) {
            const EigenBasis lanczos = lanczos_eigenpairs(m, count, opt);
            check_against_oracle(m, lanczos, 1e-8);
            CHECK(max_residual(m, lanczos) < 1e-8 * (std::abs(lanczos.values(0)) + 1));
            check_against_oracle(m, top_eigenpairs(m, count), 1e-8);
            check_against_oracle(m, top_eigenpairs(m, count, opt), 1e-8);
        }
    }
}

TEST_CASE("Lanczos on a larger sparse graph matches the dense solver") {
    std::mt19937_64 gen(5);
    const Graph g = random_graph(gen, 700, 0.015);
    const SymMatrix a = adjacency_matrix(g);
    const EigenBasis lanczos = top_eigenpairs(a, 5);  // above the dense cutoff
    const EigenBasis dense = dense_eigenpairs(a.dense(), 5);
    for (Eigen::Index k = 0; k < 5; ++k) CHECK(lanczos.values(k) == doctest::Approx(dense.values(k)).epsilon(1e-9));
    CHECK(max_residual(a, lanczos) < 1e-8 * (std::abs(lanczos.values(0)) + 1));
}

TEST_CASE("requesting more pairs than the dimension is an error") {
    const SymMatrix a = adjacency_matrix(Graph(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS(top_eigenpairs(a, 4));
    CHECK_THROWS(top_eigenpairs(a, 0));
}

}
