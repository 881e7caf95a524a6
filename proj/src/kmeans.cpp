#include "scoreplus/kmeans.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "scoreplus/rng.hpp"

namespace scoreplus {

namespace {

struct Run {
    std::vector<int> assignment;  // 0-based during the run
    Eigen::MatrixXd centers;
    double objective = 0.0;
    int iterations = 0;
    std::vector<double> trace;
};

Eigen::MatrixXd seed_centers(const Eigen::MatrixXd& x, int k, Rng& rng) {
    const Eigen::Index n = x.rows();
    Eigen::MatrixXd centers(k, x.cols());
    std::vector<double> d2(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    auto chosen = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
    for (int c = 0; c < k; ++c) {
        if (c > 0) {
            double total = 0.0;
            for (double v : d2) total += v;
            if (total > 0.0) {
                const double target = rng.uniform() * total;
                double cum = 0.0;
                chosen = n - 1;
                for (Eigen::Index i = 0; i < n; ++i) {
                    cum += d2[static_cast<std::size_t>(i)];
                    if (cum > target) {
                        chosen = i;
                        break;
                    }
                }
            } else {
                chosen = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
            }
        }
        centers.row(c) = x.row(chosen);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d = (x.row(i) - centers.row(c)).squaredNorm();
            auto& slot = d2[static_cast<std::size_t>(i)];
            if (d < slot) slot = d;
        }
    }
    return centers;
}

double assign(const Eigen::MatrixXd& x, const Eigen::MatrixXd& centers, std::vector<int>& out) {
    double objective = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (Eigen::Index c = 0; c < centers.rows(); ++c) {
            const double d = (x.row(i) - centers.row(c)).squaredNorm();
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        out[static_cast<std::size_t>(i)] = best;
        objective += best_d;
    }
    return objective;
}

Run lloyd(const Eigen::MatrixXd& x, int k, Rng& rng, int max_iterations) {
    Run run;
    run.centers = seed_centers(x, k, rng);
    run.assignment.assign(static_cast<std::size_t>(x.rows()), -1);
    std::vector<int> next(run.assignment.size());
    for (int it = 0; it < max_iterations; ++it) {
        const double obj = assign(x, run.centers, next);
        run.trace.push_back(obj);
        run.iterations = it + 1;
        run.objective = obj;
        const bool unchanged = next == run.assignment;
        run.assignment.swap(next);
        if (unchanged || it + 1 == max_iterations) break;

        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, x.cols());
        std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            const int c = run.assignment[static_cast<std::size_t>(i)];
            sums.row(c) += x.row(i);
            ++counts[static_cast<std::size_t>(c)];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) {
                run.centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
            }
        }
    }
    return run;
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, int restarts, std::uint64_t seed,
                    const KMeansOptions& options) {
    if (points.rows() < 1 || points.cols() < 1) throw std::invalid_argument("kmeans needs a non-empty n x d matrix");
    if (k < 1) throw std::invalid_argument("kmeans needs K >= 1");
    if (k > points.rows()) {
        throw std::invalid_argument("K = " + std::to_string(k) + " exceeds the number of points " +
                                    std::to_string(points.rows()));
    }
    if (restarts < 1) throw std::invalid_argument("kmeans needs at least one restart");
    if (options.max_iterations < 1) throw std::invalid_argument("kmeans needs max_iterations >= 1");
    if (!points.allFinite()) throw std::invalid_argument("kmeans input contains non-finite values");

    Run best;
    int best_restart = -1;
    for (int r = 0; r < restarts; ++r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        Run run = lloyd(points, k, rng, options.max_iterations);
        if (best_restart < 0 || run.objective < best.objective) {
            best = std::move(run);
            best_restart = r;
        }
    }

    KMeansResult result;
    result.assignment.reserve(best.assignment.size());
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (int c : best.assignment) {
        result.assignment.push_back(c + 1);
        used[static_cast<std::size_t>(c)] = true;
    }
    result.centers = std::move(best.centers);
    result.objective = best.objective;
    result.iterations = best.iterations;
    result.restart = best_restart;
    result.objective_trace = std::move(best.trace);
    for (bool u : used) result.nonempty += u ? 1 : 0;
    return result;
}

double kmeans_objective(const Eigen::MatrixXd& points, const std::vector<int>& assignment, int k) {
    if (static_cast<Eigen::Index>(assignment.size()) != points.rows()) {
        throw std::invalid_argument("assignment length does not match point count");
    }
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<double> counts(static_cast<std::size_t>(k), 0.0);
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        const int c = assignment[static_cast<std::size_t>(i)] - 1;
        if (c < 0 || c >= k) throw std::invalid_argument("assignment out of range");
        sums.row(c) += points.row(i);
        counts[static_cast<std::size_t>(c)] += 1.0;
    }
    double total = 0.0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        const int c = assignment[static_cast<std::size_t>(i)] - 1;
        total += (points.row(i) - sums.row(c) / counts[static_cast<std::size_t>(c)]).squaredNorm();
    }
    return total;
}

}  // namespace scoreplus
