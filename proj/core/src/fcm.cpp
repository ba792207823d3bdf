#include "adnf/fcm.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "adnf/adapt.hpp"
#include "adnf/geometry.hpp"
#include "adnf/random.hpp"

namespace adnf {

FeatureMatrix fcm_memberships(const FeatureMatrix& x, const FeatureMatrix& centroids, double m) {
    if (!(m > 1.0)) {
        throw ConfigError("fuzziness must be > 1, got " + std::to_string(m));
    }
    if (x.cols() != centroids.cols()) {
        throw DimensionError("points have dimension " + std::to_string(x.cols()) +
                             ", centroids " + std::to_string(centroids.cols()));
    }
    const std::size_t n = x.rows();
    const std::size_t c = centroids.rows();
    const double exponent = 2.0 / (m - 1.0);

    FeatureMatrix u(c, n);
    std::vector<double> dist(c);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t coincident = 0;
        for (std::size_t i = 0; i < c; ++i) {
            dist[i] = euclidean_distance(x.row(j), centroids.row(i));
            if (dist[i] == 0.0) ++coincident;
        }
        if (coincident > 0) {
            // Equal split among zero-distance centroids, zero elsewhere.
            for (std::size_t i = 0; i < c; ++i) {
                u(i, j) = dist[i] == 0.0 ? 1.0 / static_cast<double>(coincident) : 0.0;
            }
            continue;
        }
        for (std::size_t i = 0; i < c; ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k < c; ++k) {
                sum += std::pow(dist[i] / dist[k], exponent);
            }
            u(i, j) = 1.0 / sum;
        }
    }
    return u;
}

FeatureMatrix fcm_centroids(const FeatureMatrix& x, const FeatureMatrix& memberships, double m,
                            double numeric_eps) {
    if (memberships.cols() != x.rows()) {
        throw DimensionError("membership matrix has " + std::to_string(memberships.cols()) +
                             " columns, expected " + std::to_string(x.rows()));
    }
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    const std::size_t c = memberships.rows();

    FeatureMatrix v(c, d);
    for (std::size_t i = 0; i < c; ++i) {
        double denom = 0.0;
        std::vector<double> num(d, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double w = std::pow(memberships(i, j), m);
            denom += w;
            for (std::size_t k = 0; k < d; ++k) {
                num[k] += w * x(j, k);
            }
        }
        if (denom <= numeric_eps) {
            throw DataError("degenerate cluster " + std::to_string(i) +
                            ": membership weights sum to zero");
        }
        for (std::size_t k = 0; k < d; ++k) {
            v(i, k) = num[k] / denom;
        }
    }
    return v;
}

double fcm_objective(const FeatureMatrix& x, const FeatureMatrix& memberships,
                     const FeatureMatrix& centroids, double m) {
    if (memberships.cols() != x.rows() || memberships.rows() != centroids.rows() ||
        centroids.cols() != x.cols()) {
        throw DimensionError("inconsistent shapes in objective evaluation");
    }
    double j_total = 0.0;
    for (std::size_t j = 0; j < x.rows(); ++j) {
        for (std::size_t i = 0; i < centroids.rows(); ++i) {
            const double dist = euclidean_distance(x.row(j), centroids.row(i));
            j_total += std::pow(memberships(i, j), m) * dist * dist;
        }
    }
    return j_total;
}

namespace {

// Seeded uniform-random column-stochastic matrix.
FeatureMatrix random_partition(std::size_t c, std::size_t n, Rng& rng) {
    FeatureMatrix u(c, n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < c; ++i) {
            u(i, j) = rng.uniform01();
            sum += u(i, j);
        }
        if (sum <= 0.0) {
            for (std::size_t i = 0; i < c; ++i) u(i, j) = 1.0 / static_cast<double>(c);
        } else {
            for (std::size_t i = 0; i < c; ++i) u(i, j) /= sum;
        }
    }
    return u;
}

double max_abs_change(const FeatureMatrix& a, const FeatureMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    }
    return worst;
}

}  // namespace

FuzzyPartition fit_fcm(const FeatureMatrix& x, const ADNFConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    if (x.rows() < cfg.c) {
        throw DataError("insufficient data: " + std::to_string(x.rows()) + " points for " +
                        std::to_string(cfg.c) + " clusters");
    }

    Rng rng(seed);
    FeatureMatrix u = random_partition(cfg.c, x.rows(), rng);
    FeatureMatrix v(cfg.c, x.cols());
    std::vector<double> history;
    std::size_t iterations = 0;

    for (std::size_t iter = 0; iter < cfg.fcm_max_iter; ++iter) {
        v = fcm_centroids(x, u, cfg.m0, cfg.numeric_eps);
        FeatureMatrix u_next = fcm_memberships(x, v, cfg.m0);
        const double delta = max_abs_change(u_next, u);
        u = std::move(u_next);
        history.push_back(fcm_objective(x, u, v, cfg.m0));
        iterations = iter + 1;
        if (delta < cfg.fcm_tol) {
            break;
        }
    }

    FuzzyPartition result{std::move(u), std::move(v), history.back(), iterations,
                          std::move(history)};
    return result;
}

ModelState init_micro_clusters(const FeatureMatrix& x, const FuzzyPartition& partition,
                               const ADNFConfig& cfg) {
    const std::size_t n = x.rows();
    const std::size_t c = partition.centroids.rows();
    const double radius = percentile_radius(x);

    ModelState state;
    state.clusters.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
        MicroCluster mc;
        mc.centroid.assign(partition.centroids.row(i).begin(), partition.centroids.row(i).end());
        mc.radius = radius;
        mc.fuzziness = cfg.m0;

        double density = 0.0;
        mc.history.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double u = partition.memberships(i, j);
            density += std::pow(u, cfg.m0);
            mc.history.push_back(
                HistoryEntry{{x.row(j).begin(), x.row(j).end()}, u});
        }
        if (cfg.history_cap > 0 && mc.history.size() > cfg.history_cap) {
            mc.history.erase(mc.history.begin(),
                             mc.history.end() - static_cast<std::ptrdiff_t>(cfg.history_cap));
        }
        mc.density = density;
        mc.fuzzy_count = density;
        mc.entropy = history_entropy(mc.history, cfg.numeric_eps);
        mc.prev_entropy = mc.entropy;
        mc.prev_centroid = mc.centroid;
        mc.anchor_centroid = mc.centroid;
        mc.prev_density = mc.density;
        mc.last_update_step = 0;
        state.clusters.push_back(std::move(mc));
    }
    state.d_max = 0.0;
    state.p_max = 0.0;
    state.step = 0;
    return state;
}

}  // namespace adnf
