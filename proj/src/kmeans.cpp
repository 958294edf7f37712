#include "armload/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "armload/error.hpp"
#include "armload/rng.hpp"
#include "parallel.hpp"

namespace armload {

namespace {

constexpr std::size_t kChunk = 4096;

std::vector<std::vector<double>> plus_plus_seed(const std::vector<std::vector<double>>& points, int k,
                                                Rng& rng) {
    const std::size_t n = points.size();
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<std::size_t>(k));
    centers.push_back(points[rng.uniform_index(n)]);

    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], centers[0]);

    while (centers.size() < static_cast<std::size_t>(k)) {
        double total = 0.0;
        for (double d : d2) total += d;
        std::size_t pick;
        if (total <= 0.0) {
            // All remaining mass is on duplicate points; fall back to uniform.
            pick = rng.uniform_index(n);
        } else {
            const double u = rng.uniform_double() * total;
            double cum = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                cum += d2[i];
                if (cum > u) {
                    pick = i;
                    break;
                }
            }
        }
        centers.push_back(points[pick]);
        const auto& c = centers.back();
        for (std::size_t i = 0; i < n; ++i) d2[i] = std::min(d2[i], squared_distance(points[i], c));
    }
    return centers;
}

}  // namespace

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

KMeansModel kmeans_fit(const std::vector<std::vector<double>>& points, int k, int max_iters,
                       std::uint64_t seed, int jobs) {
    if (k < 1) throw InvalidInputError("kmeans_fit: k must be >= 1");
    if (points.size() < static_cast<std::size_t>(k)) {
        throw InsufficientDataError("kmeans_fit: " + std::to_string(points.size()) + " point(s) for k=" +
                                    std::to_string(k));
    }
    const std::size_t n = points.size();
    const std::size_t dim = points[0].size();
    for (const auto& p : points) {
        if (p.size() != dim) throw InvalidInputError("kmeans_fit: points have mixed dimensions");
    }

    Rng rng(seed);
    KMeansModel model;
    model.k = k;
    model.dim = dim;
    model.centers = plus_plus_seed(points, k, rng);

    std::vector<int> assign(n, -1);
    std::vector<int> prev_assign(n, -1);
    const std::size_t num_chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> chunk_inertia(num_chunks);
    // Per-chunk partial sums; combined in chunk order so the reduction has a
    // fixed floating-point evaluation order.
    std::vector<std::vector<double>> chunk_sums(num_chunks);
    std::vector<std::vector<std::size_t>> chunk_counts(num_chunks);

    for (int iter = 0; iter < max_iters; ++iter) {
        detail::parallel_chunks(n, jobs, kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
            double local_inertia = 0.0;
            auto& sums = chunk_sums[c];
            auto& counts = chunk_counts[c];
            sums.assign(static_cast<std::size_t>(k) * dim, 0.0);
            counts.assign(static_cast<std::size_t>(k), 0);
            for (std::size_t i = begin; i < end; ++i) {
                double best = std::numeric_limits<double>::infinity();
                int best_j = 0;
                for (int j = 0; j < k; ++j) {
                    const double d = squared_distance(points[i], model.centers[j]);
                    if (d < best) {
                        best = d;
                        best_j = j;
                    }
                }
                assign[i] = best_j;
                local_inertia += best;
                counts[static_cast<std::size_t>(best_j)] += 1;
                double* s = sums.data() + static_cast<std::size_t>(best_j) * dim;
                const double* p = points[i].data();
                for (std::size_t d = 0; d < dim; ++d) s[d] += p[d];
            }
            chunk_inertia[c] = local_inertia;
        });

        double inertia = 0.0;
        for (double ci : chunk_inertia) inertia += ci;
        model.inertia_history.push_back(inertia);
        model.inertia = inertia;
        model.iterations = iter + 1;

        if (assign == prev_assign) break;
        prev_assign = assign;

        std::vector<double> sums(static_cast<std::size_t>(k) * dim, 0.0);
        std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
        for (std::size_t c = 0; c < num_chunks; ++c) {
            for (std::size_t j = 0; j < sums.size(); ++j) sums[j] += chunk_sums[c][j];
            for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += chunk_counts[c][j];
        }

        for (int j = 0; j < k; ++j) {
            if (counts[static_cast<std::size_t>(j)] == 0) continue;
            double* ctr = model.centers[static_cast<std::size_t>(j)].data();
            const double* s = sums.data() + static_cast<std::size_t>(j) * dim;
            const double inv = 1.0 / static_cast<double>(counts[static_cast<std::size_t>(j)]);
            for (std::size_t d = 0; d < dim; ++d) ctr[d] = s[d] * inv;
        }
        // Empty clusters re-seed to the point farthest from its assigned
        // center, each empty cluster taking a distinct point.
        std::vector<char> stolen(n, 0);
        for (int j = 0; j < k; ++j) {
            if (counts[static_cast<std::size_t>(j)] > 0) continue;
            double best = -1.0;
            std::size_t pick = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (stolen[i]) continue;
                const double d = squared_distance(points[i], model.centers[static_cast<std::size_t>(assign[i])]);
                if (d > best) {
                    best = d;
                    pick = i;
                }
            }
            stolen[pick] = 1;
            model.centers[static_cast<std::size_t>(j)] = points[pick];
        }
    }
    return model;
}

int kmeans_assign(const KMeansModel& model, const std::vector<double>& point) {
    if (point.size() != model.dim) {
        throw InvalidInputError("kmeans_assign: point dimension " + std::to_string(point.size()) +
                                " does not match model dimension " + std::to_string(model.dim));
    }
    double best = std::numeric_limits<double>::infinity();
    int best_j = 0;
    for (int j = 0; j < model.k; ++j) {
        const double d = squared_distance(point, model.centers[static_cast<std::size_t>(j)]);
        if (d < best) {
            best = d;
            best_j = j;
        }
    }
    return best_j;
}

}  // namespace armload
