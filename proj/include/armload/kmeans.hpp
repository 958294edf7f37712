#pragma once

#include <cstdint>
#include <vector>

namespace armload {

struct KMeansModel {
    int k = 0;
    std::size_t dim = 0;
    std::vector<std::vector<double>> centers;
    double inertia = 0.0;                  // sum of squared distances to assigned centers
    std::vector<double> inertia_history;   // one entry per Lloyd assignment pass
    int iterations = 0;
};

// Lloyd's algorithm with k-means++ seeding. Terminates when assignments are
// stable or max_iters is reached; empty clusters are re-seeded to the point
// farthest from its assigned center. Deterministic for fixed
// (point order, k, seed), independent of the worker count.
KMeansModel kmeans_fit(const std::vector<std::vector<double>>& points, int k, int max_iters = 100,
                       std::uint64_t seed = 0, int jobs = 1);

// Index of the nearest center by squared Euclidean distance; ties break to the
// lowest index.
int kmeans_assign(const KMeansModel& model, const std::vector<double>& point);

double squared_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace armload
