#include "adnf/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "adnf/geometry.hpp"

namespace adnf {

std::vector<int> hard_assign(const FeatureMatrix& x, const ModelState& state) {
    if (state.clusters.empty()) {
        throw DataError("cannot assign with an empty model");
    }
    std::vector<int> labels(x.rows());
    for (std::size_t j = 0; j < x.rows(); ++j) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < state.clusters.size(); ++i) {
            const double d = euclidean_distance(x.row(j), state.clusters[i].centroid);
            if (d < best_dist) {
                best = i;
                best_dist = d;
            }
        }
        labels[j] = static_cast<int>(best);
    }
    return labels;
}

double silhouette(const FeatureMatrix& x, std::span<const int> labels) {
    const std::size_t n = x.rows();
    if (labels.size() != n) {
        throw DimensionError("label count " + std::to_string(labels.size()) +
                             " does not match " + std::to_string(n) + " points");
    }

    // Group point indices by label value.
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < n; ++j) {
        groups[labels[j]].push_back(j);
    }
    if (groups.size() < 2) {
        throw DataError("silhouette undefined for fewer than 2 distinct labels");
    }

    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<std::size_t>& own = groups.at(labels[j]);
        if (own.size() == 1) {
            continue;  // singleton clusters score 0
        }
        double intra = 0.0;
        for (std::size_t k : own) {
            if (k != j) {
                intra += euclidean_distance(x.row(j), x.row(k));
            }
        }
        const double a = intra / static_cast<double>(own.size() - 1);

        double b = std::numeric_limits<double>::infinity();
        for (const auto& [label, members] : groups) {
            if (label == labels[j]) {
                continue;
            }
            double sum = 0.0;
            for (std::size_t k : members) {
                sum += euclidean_distance(x.row(j), x.row(k));
            }
            b = std::min(b, sum / static_cast<double>(members.size()));
        }

        const double denom = std::max(a, b);
        if (denom > 0.0) {
            total += (b - a) / denom;
        }
    }
    return total / static_cast<double>(n);
}

}  // namespace adnf
