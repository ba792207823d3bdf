#include "adnf/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "adnf/adapt.hpp"
#include "adnf/geometry.hpp"

namespace adnf {

std::optional<double> merge_threshold(const ModelState& state, const ADNFConfig& cfg) {
    const std::size_t n = state.clusters.size();
    if (n < 2) {
        return std::nullopt;
    }
    std::vector<double> dists;
    dists.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dists.push_back(
                euclidean_distance(state.clusters[i].centroid, state.clusters[j].centroid));
        }
    }
    return cfg.rho_merge * median(std::move(dists));
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);  // keep the smallest index as root
        parent[b] = a;
    }
};

MicroCluster merge_component(const std::vector<MicroCluster>& clusters,
                             const std::vector<std::size_t>& members, const ADNFConfig& cfg) {
    const std::size_t d = clusters[members.front()].centroid.size();

    double total_density = 0.0;
    for (std::size_t idx : members) total_density += clusters[idx].density;
    const bool weighted = total_density > cfg.numeric_eps;
    const double denom =
        weighted ? total_density : static_cast<double>(members.size());

    MicroCluster merged;
    merged.centroid.assign(d, 0.0);
    merged.radius = 0.0;
    merged.fuzziness = 0.0;
    for (std::size_t idx : members) {
        const MicroCluster& mc = clusters[idx];
        const double w = weighted ? mc.density : 1.0;
        for (std::size_t k = 0; k < d; ++k) {
            merged.centroid[k] += w * mc.centroid[k];
        }
        merged.radius += w * mc.radius;
        merged.fuzziness += w * mc.fuzziness;
        merged.density += mc.density;
        merged.fuzzy_count += mc.fuzzy_count;
        merged.history.insert(merged.history.end(), mc.history.begin(), mc.history.end());
        merged.last_update_step = std::max(merged.last_update_step, mc.last_update_step);
    }
    for (std::size_t k = 0; k < d; ++k) merged.centroid[k] /= denom;
    merged.radius /= denom;
    merged.fuzziness /= denom;

    if (cfg.history_cap > 0 && merged.history.size() > cfg.history_cap) {
        merged.history.erase(merged.history.begin(),
                             merged.history.end() -
                                 static_cast<std::ptrdiff_t>(cfg.history_cap));
    }
    merged.entropy = history_entropy(merged.history, cfg.numeric_eps);
    merged.prev_entropy = merged.entropy;
    merged.prev_centroid = merged.centroid;
    merged.anchor_centroid = merged.centroid;
    merged.prev_density = merged.density;
    return merged;
}

}  // namespace

RefinementReport merge_clusters(ModelState& state, const ADNFConfig& cfg) {
    RefinementReport report;
    const std::optional<double> tau = merge_threshold(state, cfg);
    report.tau_m = tau;
    if (!tau) {
        return report;
    }

    const std::size_t n = state.clusters.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d =
                euclidean_distance(state.clusters[i].centroid, state.clusters[j].centroid);
            // Coincident centroids always merge, even when tau_m is 0.
            if (d < *tau || d == 0.0) {
                uf.unite(i, j);
            }
        }
    }

    std::vector<std::vector<std::size_t>> components(n);
    for (std::size_t i = 0; i < n; ++i) {
        components[uf.find(i)].push_back(i);
    }

    std::vector<MicroCluster> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::size_t>& members = components[i];
        if (members.empty()) {
            continue;  // not a root
        }
        if (members.size() == 1) {
            next.push_back(std::move(state.clusters[i]));
            continue;
        }
        MergeEvent event;
        event.sources = members;  // ascending by construction
        event.survivor = next.size();
        report.merges.push_back(std::move(event));
        next.push_back(merge_component(state.clusters, members, cfg));
    }
    state.clusters = std::move(next);
    return report;
}

double local_entropy(double u, const ADNFConfig& cfg) {
    if (u < 0.0 || u > 1.0) {
        throw DataError("membership " + std::to_string(u) + " outside [0, 1]");
    }
    return std::max(0.0, -(u + cfg.numeric_eps) * std::log(u + cfg.numeric_eps));
}

double split_threshold(const ModelState& state, std::span<const double> ftis,
                       const ADNFConfig& cfg) {
    std::vector<double> entropies;
    entropies.reserve(state.clusters.size());
    for (const MicroCluster& mc : state.clusters) {
        entropies.push_back(mc.entropy);
    }
    const double h_mean = mean(entropies);
    const double h_std = population_stddev(entropies);
    const double fti_mean = mean(ftis);
    return (h_mean + cfg.k_sigma * h_std) * (1.0 + cfg.gamma * fti_mean);
}

std::vector<int> dbscan(const FeatureMatrix& points, double eps, std::size_t min_samples) {
    if (!(eps > 0.0)) {
        throw ConfigError("dbscan eps must be > 0");
    }
    if (min_samples < 1) {
        throw ConfigError("dbscan min_samples must be >= 1");
    }
    const std::size_t n = points.rows();
    constexpr int kUnvisited = -2;
    std::vector<int> labels(n, kUnvisited);

    auto neighbours = [&](std::size_t center) {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n; ++j) {
            if (euclidean_distance(points.row(center), points.row(j)) <= eps) {
                out.push_back(j);  // includes the center itself
            }
        }
        return out;
    };

    int cluster_id = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] != kUnvisited) {
            continue;
        }
        std::vector<std::size_t> seed = neighbours(i);
        if (seed.size() < min_samples) {
            labels[i] = kDbscanNoise;
            continue;
        }
        labels[i] = cluster_id;
        std::deque<std::size_t> queue(seed.begin(), seed.end());
        while (!queue.empty()) {
            const std::size_t q = queue.front();
            queue.pop_front();
            if (labels[q] == kDbscanNoise) {
                labels[q] = cluster_id;  // noise becomes a border point
            }
            if (labels[q] != kUnvisited) {
                continue;
            }
            labels[q] = cluster_id;
            std::vector<std::size_t> reach = neighbours(q);
            if (reach.size() >= min_samples) {
                queue.insert(queue.end(), reach.begin(), reach.end());
            }
        }
        ++cluster_id;
    }
    return labels;
}

RefinementReport split_clusters(ModelState& state, std::span<const double> ftis,
                                const ADNFConfig& cfg) {
    RefinementReport report;
    if (state.clusters.empty()) {
        return report;
    }
    const double tau_s = split_threshold(state, ftis, cfg);
    report.tau_s = tau_s;

    const std::size_t original_count = state.clusters.size();
    std::vector<MicroCluster> children;
    std::vector<std::size_t> empty_parents;

    for (std::size_t i = 0; i < original_count; ++i) {
        MicroCluster& parent = state.clusters[i];
        if (!(parent.entropy > tau_s)) {
            continue;
        }

        // Partition the history into uncertain candidates and retained rest.
        std::vector<HistoryEntry> uncertain;
        std::vector<HistoryEntry> retained;
        for (HistoryEntry& entry : parent.history) {
            if (local_entropy(entry.membership, cfg) > tau_s) {
                uncertain.push_back(std::move(entry));
            } else {
                retained.push_back(std::move(entry));
            }
        }

        SplitEvent event;
        event.source = i;

        if (!uncertain.empty()) {
            FeatureMatrix pts(uncertain.size(), uncertain.front().point.size());
            for (std::size_t r = 0; r < uncertain.size(); ++r) {
                std::copy(uncertain[r].point.begin(), uncertain[r].point.end(),
                          pts.row(r).begin());
            }
            const std::vector<int> labels = dbscan(pts, cfg.eps_split, cfg.min_samples);

            const int group_count = *std::max_element(labels.begin(), labels.end()) + 1;
            std::vector<std::vector<std::size_t>> groups(std::max(group_count, 0));
            for (std::size_t r = 0; r < labels.size(); ++r) {
                if (labels[r] >= 0) {
                    groups[static_cast<std::size_t>(labels[r])].push_back(r);
                }
            }

            std::vector<bool> moved(uncertain.size(), false);
            for (const std::vector<std::size_t>& group : groups) {
                if (group.size() < cfg.min_split_cardinality) {
                    continue;
                }
                MicroCluster child;
                const std::size_t d = parent.centroid.size();
                child.centroid.assign(d, 0.0);
                child.fuzziness = parent.fuzziness;
                child.radius = parent.radius;
                child.last_update_step = parent.last_update_step;
                for (std::size_t r : group) {
                    const HistoryEntry& e = uncertain[r];
                    for (std::size_t k = 0; k < d; ++k) child.centroid[k] += e.point[k];
                    child.density += std::pow(e.membership, parent.fuzziness);
                    child.history.push_back(e);
                    moved[r] = true;
                }
                for (std::size_t k = 0; k < child.centroid.size(); ++k) {
                    child.centroid[k] /= static_cast<double>(group.size());
                }
                child.fuzzy_count = child.density;
                child.entropy = history_entropy(child.history, cfg.numeric_eps);
                child.prev_entropy = child.entropy;
                child.prev_centroid = child.centroid;
                child.anchor_centroid = child.centroid;
                child.prev_density = child.density;
                children.push_back(std::move(child));
                ++event.new_clusters;
            }

            // Noise and undersized groups stay with the parent.
            for (std::size_t r = 0; r < uncertain.size(); ++r) {
                if (!moved[r]) {
                    retained.push_back(std::move(uncertain[r]));
                }
            }
        }

        parent.history = std::move(retained);
        double density = 0.0;
        for (const HistoryEntry& e : parent.history) {
            density += std::pow(e.membership, parent.fuzziness);
        }
        parent.density = density;
        parent.fuzzy_count = density;
        parent.entropy = history_entropy(parent.history, cfg.numeric_eps);
        if (parent.history.empty()) {
            empty_parents.push_back(i);
        }
        report.splits.push_back(std::move(event));
    }

    for (MicroCluster& child : children) {
        state.clusters.push_back(std::move(child));
    }
    for (auto it = empty_parents.rbegin(); it != empty_parents.rend(); ++it) {
        state.clusters.erase(state.clusters.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    return report;
}

RefinementReport refine(ModelState& state, std::span<const double> ftis, const ADNFConfig& cfg) {
    RefinementReport merged = merge_clusters(state, cfg);
    RefinementReport split = split_clusters(state, ftis, cfg);
    merged.splits = std::move(split.splits);
    merged.tau_s = split.tau_s;
    return merged;
}

}  // namespace adnf
