#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace scoreplus {

struct KMeansResult {
    /// Cluster per row, 1..K.
    std::vector<int> assignment;
    Eigen::MatrixXd centers;  // K x d
    double objective = 0.0;
    int iterations = 0;
    int nonempty = 0;
    /// Restart that produced this result.
    int restart = 0;
    /// Objective after each assignment step of the winning run.
    std::vector<double> objective_trace;
};

struct KMeansOptions {
    int max_iterations = 300;
};

/**
 * Best of `restarts` runs of k-means++ seeding followed by Lloyd iterations
 * (until the assignment stops changing, or max_iterations). Restart r draws
 * from Rng::stream(seed, r). Distance ties go to the lowest center index; a
 * cluster that empties stays empty. Equal objectives keep the earlier restart.
 */
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, int restarts, std::uint64_t seed,
                    const KMeansOptions& options = {});

/// Sum of squared distances of rows to the mean of their assigned cluster.
double kmeans_objective(const Eigen::MatrixXd& points, const std::vector<int>& assignment, int k);

}  // namespace scoreplus
