#include "adnf/adapt.hpp"

#include <algorithm>
#include <cmath>

#include "adnf/geometry.hpp"

namespace adnf {

double history_entropy(std::span<const HistoryEntry> history, double numeric_eps) {
    double h = 0.0;
    for (const HistoryEntry& entry : history) {
        // Clamped at zero so u = 1 contributes exactly 0 despite the log guard.
        h += std::max(0.0, -entry.membership * std::log(entry.membership + numeric_eps));
    }
    return h;
}

double cluster_entropy(const MicroCluster& cluster, const ADNFConfig& cfg) {
    return history_entropy(cluster.history, cfg.numeric_eps);
}

namespace {

double fti_given_entropy(const MicroCluster& cluster, double current_entropy) {
    const double delta_h = current_entropy - cluster.prev_entropy;
    const double delta_v = euclidean_distance(cluster.centroid, cluster.anchor_centroid);
    const double delta_p = euclidean_distance(cluster.centroid, cluster.prev_centroid);
    return delta_h / (delta_v + delta_p + cluster.radius);
}

}  // namespace

double compute_fti(const MicroCluster& cluster, const ADNFConfig& cfg) {
    return fti_given_entropy(cluster, cluster_entropy(cluster, cfg));
}

AdaptationReport tune_fuzziness(ModelState& state, const ADNFConfig& cfg) {
    if (state.clusters.empty()) {
        throw DataError("cannot adapt an empty model");
    }

    AdaptationReport report;
    report.rows.reserve(state.clusters.size());
    std::vector<double> ftis;
    ftis.reserve(state.clusters.size());

    for (const MicroCluster& mc : state.clusters) {
        AdaptationRow row;
        row.entropy = cluster_entropy(mc, cfg);
        row.delta_entropy = row.entropy - mc.prev_entropy;
        row.delta_v = euclidean_distance(mc.centroid, mc.anchor_centroid);
        row.delta_p = euclidean_distance(mc.centroid, mc.prev_centroid);
        row.fti = fti_given_entropy(mc, row.entropy);
        ftis.push_back(row.fti);
        report.rows.push_back(row);
    }

    const double med = median(ftis);
    report.median_fti = med;

    for (std::size_t i = 0; i < state.clusters.size(); ++i) {
        MicroCluster& mc = state.clusters[i];
        double m_new;
        if (med <= cfg.numeric_eps) {
            // Dividing by a vanishing or negative median is undefined; fall
            // back to the base fuzziness.
            m_new = cfg.m0;
        } else {
            m_new = 1.0 + (cfg.m0 - 1.0) * std::max(report.rows[i].fti, 0.0) / med;
            m_new = std::clamp(m_new, 1.0 + cfg.numeric_eps, cfg.m_max);
        }
        mc.fuzziness = m_new;
        report.rows[i].new_fuzziness = m_new;

        mc.entropy = report.rows[i].entropy;
        mc.prev_entropy = mc.entropy;
        mc.anchor_centroid = mc.centroid;
    }

    return report;
}

}  // namespace adnf
