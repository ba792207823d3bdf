#include "adnf/stream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "adnf/adapt.hpp"
#include "adnf/geometry.hpp"

namespace adnf {

double streaming_membership(std::span<const double> x, const ModelState& state,
                            std::size_t target) {
    if (target >= state.clusters.size()) {
        throw DataError("cluster index " + std::to_string(target) + " out of range");
    }
    const std::size_t c = state.clusters.size();
    std::vector<double> dist(c);
    std::size_t coincident = 0;
    for (std::size_t k = 0; k < c; ++k) {
        dist[k] = euclidean_distance(x, state.clusters[k].centroid);
        if (dist[k] == 0.0) ++coincident;
    }
    if (coincident > 0) {
        return dist[target] == 0.0 ? 1.0 / static_cast<double>(coincident) : 0.0;
    }
    const double exponent = 2.0 / (state.clusters[target].fuzziness - 1.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < c; ++k) {
        sum += std::pow(dist[target] / dist[k], exponent);
    }
    return 1.0 / sum;
}

double dynamic_learning_rate(const MicroCluster& cluster, const ModelState& state,
                             const ADNFConfig& cfg) {
    const double delta_d = std::abs(cluster.density - cluster.prev_density);
    const double delta_p = euclidean_distance(cluster.centroid, cluster.prev_centroid);
    // 0/0 counts as 0: before any delta has been observed the rate sits at
    // the floor.
    const double rd = state.d_max > cfg.numeric_eps ? delta_d / state.d_max : 0.0;
    const double rp = state.p_max > cfg.numeric_eps ? delta_p / state.p_max : 0.0;
    const double rate = 0.5 * (rd + rp);
    return std::clamp(rate, cfg.lambda_min, 1.0);
}

AbsorptionReport absorb(std::span<const double> x, ModelState& state, const ADNFConfig& cfg) {
    if (state.clusters.empty()) {
        throw DataError("model has no clusters; initialize before streaming");
    }
    const std::size_t d = state.clusters.front().centroid.size();
    if (x.size() != d) {
        throw DimensionError("point has dimension " + std::to_string(x.size()) + ", model has " +
                             std::to_string(d));
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw DataError("non-finite value in streamed point");
        }
    }

    const std::size_t step_index = state.step;
    AbsorptionReport report;
    report.step = step_index;

    // Nearest cluster whose radius covers x; ties keep the lowest index.
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t i = 0; i < state.clusters.size(); ++i) {
        const double dist = euclidean_distance(x, state.clusters[i].centroid);
        if (dist <= state.clusters[i].radius && dist < best_dist) {
            best = i;
            best_dist = dist;
            found = true;
        }
    }

    if (found) {
        const double u = streaming_membership(x, state, best);
        MicroCluster& mc = state.clusters[best];
        const double lambda = dynamic_learning_rate(mc, state, cfg);

        mc.prev_centroid = mc.centroid;
        mc.prev_density = mc.density;

        const double w = lambda * std::pow(u, mc.fuzziness);
        const double denom = w + mc.density + cfg.numeric_eps;
        for (std::size_t k = 0; k < d; ++k) {
            mc.centroid[k] = (w * x[k] + mc.prev_density * mc.prev_centroid[k]) / denom;
        }
        mc.density += std::pow(u, mc.fuzziness);
        mc.fuzzy_count += std::pow(u, mc.fuzziness);

        mc.history.push_back(HistoryEntry{{x.begin(), x.end()}, u});
        if (cfg.history_cap > 0 && mc.history.size() > cfg.history_cap) {
            mc.history.erase(mc.history.begin());
        }
        mc.last_update_step = step_index;

        state.d_max = std::max(state.d_max, std::abs(mc.density - mc.prev_density));
        state.p_max = std::max(state.p_max, euclidean_distance(mc.centroid, mc.prev_centroid));

        report.matched_cluster = best;
        report.membership_used = u;
        report.learning_rate_used = lambda;
    } else {
        std::vector<double> radii;
        radii.reserve(state.clusters.size());
        for (const MicroCluster& mc : state.clusters) {
            radii.push_back(mc.radius);
        }

        MicroCluster fresh;
        fresh.centroid.assign(x.begin(), x.end());
        fresh.density = 1.0;
        fresh.fuzzy_count = 1.0;
        fresh.radius = median(std::move(radii));
        fresh.fuzziness = cfg.m0;
        fresh.history.push_back(HistoryEntry{{x.begin(), x.end()}, 1.0});
        fresh.entropy = history_entropy(fresh.history, cfg.numeric_eps);
        fresh.prev_entropy = fresh.entropy;
        fresh.prev_centroid = fresh.centroid;
        fresh.anchor_centroid = fresh.centroid;
        fresh.prev_density = fresh.density;
        fresh.last_update_step = step_index;
        state.clusters.push_back(std::move(fresh));

        report.created_new = true;
        report.membership_used = 1.0;
        report.learning_rate_used = 0.0;
    }

    state.step = step_index + 1;
    return report;
}

std::vector<AbsorptionReport> process_stream(std::span<const std::vector<double>> points,
                                             ModelState& state, const ADNFConfig& cfg) {
    if (state.clusters.empty()) {
        throw DataError("model has no clusters; initialize before streaming");
    }
    std::vector<AbsorptionReport> reports;
    reports.reserve(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        try {
            reports.push_back(absorb(points[j], state, cfg));
        } catch (const Error& e) {
            throw DataError("point " + std::to_string(j) + ": " + e.what());
        }
    }
    return reports;
}

std::vector<AbsorptionReport> process_stream(const FeatureMatrix& points, ModelState& state,
                                             const ADNFConfig& cfg) {
    if (state.clusters.empty()) {
        throw DataError("model has no clusters; initialize before streaming");
    }
    std::vector<AbsorptionReport> reports;
    reports.reserve(points.rows());
    for (std::size_t j = 0; j < points.rows(); ++j) {
        try {
            reports.push_back(absorb(points.row(j), state, cfg));
        } catch (const Error& e) {
            throw DataError("point " + std::to_string(j) + ": " + e.what());
        }
    }
    return reports;
}

}  // namespace adnf
