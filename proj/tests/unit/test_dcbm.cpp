#include <doctest.h>

#include <cmath>

#include "scoreplus/dcbm.hpp"
#include "scoreplus/rng.hpp"

using namespace scoreplus;

TEST_SUITE("dcbm") {

TEST_CASE("scale constant") {
    CHECK(ParetoSpec::for_size(1000).c_n == doctest::Approx(0.020723).epsilon(1e-4));
    CHECK(ParetoSpec::for_size(1000).c_n == doctest::Approx(3.0 * std::log(1000.0) / 1000.0).epsilon(1e-15));
    CHECK(ParetoSpec::for_size(1000).mean() == doctest::Approx(1.0));
}

TEST_CASE("Pareto degree parameters") {
    const ParetoSpec spec = ParetoSpec::for_size(1000);
    const auto theta = sample_theta(100000, spec, 42);
    double sum = 0.0;
    for (double t : theta) {
        CHECK(t >= spec.c_n * spec.beta);
        sum += t / spec.c_n;
    }
    CHECK(std::abs(sum / static_cast<double>(theta.size()) - 1.0) < 0.02);
    CHECK_THROWS(ParetoSpec{1.0, 0.8, 0.1}.validate());
}

TEST_CASE("balanced membership") {
    CHECK(build_balanced_pi(4, 1) == std::vector<int>{1, 1, 1, 1});
    CHECK(build_balanced_pi(10, 4) == std::vector<int>{1, 1, 2, 2, 3, 3, 4, 4, 4, 4});
    CHECK_THROWS(build_balanced_pi(3, 4));
}

TEST_CASE("published P matrices") {
    const Eigen::MatrixXd p1 = experiment_p_matrix(1);
    CHECK(p1(0, 0) == 1.0);
    CHECK(p1(0, 3) == 0.5);
    const Eigen::MatrixXd p2 = experiment_p_matrix(2);
    CHECK(p2(0, 1) == doctest::Approx(2.0 / 3.0));
    CHECK(p2(0, 2) == doctest::Approx(0.1));
    CHECK(p2(2, 3) == doctest::Approx(0.5));
    CHECK(p2 == p2.transpose());
    CHECK_THROWS(experiment_p_matrix(3));
}

TEST_CASE("zero P gives an empty graph") {
    DcbmParams params;
    params.n = 50;
    params.k = 2;
    params.p = Eigen::MatrixXd::Zero(2, 2);
    params.theta.assign(50, 1.0);
    params.membership = build_balanced_pi(50, 2);
    CHECK(sample_adjacency(params, 1).graph.num_edges() == 0);
}

TEST_CASE("constant theta with one block is Erdos-Renyi") {
    const std::size_t n = 400;
    const double p = 0.05;
    DcbmParams params;
    params.n = n;
    params.k = 1;
    params.p = Eigen::MatrixXd::Constant(1, 1, p);
    params.theta.assign(n, 1.0);
    params.membership.assign(n, 1);
    const double pairs = static_cast<double>(n * (n - 1) / 2);
    const double sigma = std::sqrt(pairs * p * (1 - p));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto edges = static_cast<double>(sample_adjacency(params, seed).graph.num_edges());
        CHECK(std::abs(edges - pairs * p) < 4 * sigma);
    }
}

TEST_CASE("mean degree matches the expected degree of Omega") {
    const Eigen::MatrixXd p = experiment_p_matrix(1);
    const DcbmParams params = experiment_params(1000, p, 9);
    double expected = 0.0;
    for (double d : params.expected_degrees()) expected += d;
    expected /= 1000.0;
    double observed = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        observed += 2.0 * static_cast<double>(sample_adjacency(params, seed).graph.num_edges()) / 1000.0;
    }
    observed /= 50.0;
    // 50 x 1000 nodes: the standard error of the mean degree is well below 0.05
    CHECK(std::abs(observed - expected) < 0.1);
}

TEST_CASE("simulation is reproducible and labelled") {
    const DcbmParams params = experiment_params(200, experiment_p_matrix(2), 3);
    const auto a = sample_adjacency(params, 3);
    const auto b = sample_adjacency(params, 3);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.graph.num_labels() == 4);
    CHECK(a.graph.labels() == params.membership);
    CHECK(sample_adjacency(params, 4).graph.edges() != a.graph.edges());
}

TEST_CASE("parameter validation") {
    DcbmParams params = experiment_params(20, experiment_p_matrix(1), 1);
    params.theta[3] = 0.0;
    CHECK_THROWS(params.validate());
    params = experiment_params(20, experiment_p_matrix(1), 1);
    params.p(0, 1) = 0.9;
    CHECK_THROWS(params.validate());
}

TEST_CASE("P matrix files") {
    const Eigen::MatrixXd p = parse_p_matrix("1 0.5\n0.5 1\n");
    CHECK(p.rows() == 2);
    CHECK(p(1, 0) == 0.5);
    CHECK_THROWS_AS(parse_p_matrix("1 0.5\n0.4 1\n"), ParseError);
    CHECK_THROWS_AS(parse_p_matrix("1 x\nx 1\n"), ParseError);
    CHECK_THROWS_AS(parse_p_matrix(""), ParseError);
}

TEST_CASE("random streams") {
    Rng a = Rng::stream(5, 0), b = Rng::stream(5, 0), c = Rng::stream(5, 1);
    CHECK(a.next() == b.next());
    CHECK(a.next() != c.next());
    Rng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(u.below(7) < 7);
    }
}

}
