#ifndef ADNF_TOPOLOGY_HPP
#define ADNF_TOPOLOGY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

// One merge: `sources` are pre-merge cluster indices (ascending); `survivor`
// is the merged cluster's index in the post-merge list.
struct MergeEvent {
    std::vector<std::size_t> sources;
    std::size_t survivor = 0;
};

// One attempted split: `source` is the pre-split cluster index,
// `new_clusters` the number of subclusters actually created (may be 0 when
// every candidate point ends up as DBSCAN noise).
struct SplitEvent {
    std::size_t source = 0;
    std::size_t new_clusters = 0;
};

struct RefinementReport {
    std::vector<MergeEvent> merges;
    std::vector<SplitEvent> splits;
    std::optional<double> tau_m;  // unset when merging was skipped (< 2 clusters)
    std::optional<double> tau_s;  // unset when splitting was skipped
};

// tau_m = rho_merge * median of pairwise centroid distances.
// Returns nullopt with fewer than 2 clusters (threshold undefined).
std::optional<double> merge_threshold(const ModelState& state, const ADNFConfig& cfg);

// Consolidates every connected component of the graph {d_ij < tau_m} (pairs
// with coincident centroids are always connected) into one cluster via
// density-weighted averaging; histories are concatenated and the entropy
// recomputed. tau_m is derived once from the pre-merge state - merging never
// cascades within a pass.
RefinementReport merge_clusters(ModelState& state, const ADNFConfig& cfg);

// Per-assignment uncertainty -(u + eps) ln(u + eps), clamped at zero.
// Throws DataError if u is outside [0, 1].
double local_entropy(double u, const ADNFConfig& cfg);

// tau_s = (mean(H) + k_sigma * popstd(H)) * (1 + gamma * mean(FTI)).
// An empty FTI list contributes mean 0.
double split_threshold(const ModelState& state, std::span<const double> ftis,
                       const ADNFConfig& cfg);

inline constexpr int kDbscanNoise = -1;

// Plain density-based expansion: a core point has at least min_samples
// neighbours within eps, counting itself; clusters grow from core points in
// index order, border points join the first cluster that reaches them, the
// rest is labelled kDbscanNoise. Deterministic for a fixed input order.
// Throws ConfigError if eps <= 0 or min_samples < 1.
std::vector<int> dbscan(const FeatureMatrix& points, double eps, std::size_t min_samples);

// For every cluster whose entropy exceeds tau_s, reclusters its most
// uncertain history entries (local_entropy(u) > tau_s) with
// dbscan(eps_split, min_samples). Subclusters of cardinality >=
// min_split_cardinality become new micro-clusters inheriting the parent's
// fuzziness and radius; the parent keeps the remaining entries with density
// and entropy recomputed, and is dropped entirely if nothing remains.
RefinementReport split_clusters(ModelState& state, std::span<const double> ftis,
                                const ADNFConfig& cfg);

// One refinement pass: merge, then split. Reports are combined.
RefinementReport refine(ModelState& state, std::span<const double> ftis, const ADNFConfig& cfg);

}  // namespace adnf

#endif  // ADNF_TOPOLOGY_HPP
