#ifndef ADNF_STREAM_HPP
#define ADNF_STREAM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

// Audit record for one absorbed point. Exactly one of matched_cluster /
// created_new is set.
struct AbsorptionReport {
    std::optional<std::size_t> matched_cluster;
    double membership_used = 0.0;
    double learning_rate_used = 0.0;
    bool created_new = false;
    std::size_t step = 0;
};

// Localized membership of x in the target cluster, using the target's own
// fuzziness for the exponent 2/(m-1) across all terms of the sum. The
// zero-distance singularity rule matches fcm_memberships.
double streaming_membership(std::span<const double> x, const ModelState& state, std::size_t target);

// lambda_t = clamp(0.5 * (|dD|/d_max + ||dP||/p_max), lambda_min, 1) where the
// deltas come from the cluster's trackers and 0/0 ratios count as 0.
double dynamic_learning_rate(const MicroCluster& cluster, const ModelState& state,
                             const ADNFConfig& cfg);

// Absorbs one point: picks the nearest cluster whose sensitivity radius
// covers x and applies the damped centroid update
//   v <- (lambda * u^m * x + D * v) / (lambda * u^m + D + eps),
//   D <- D + u^m,  n <- n + u^m,
// or spawns a fresh cluster at x (D = 1, fuzziness m0, radius = median of
// existing radii) when no cluster covers it.
// Throws DimensionError / DataError on bad input.
AbsorptionReport absorb(std::span<const double> x, ModelState& state, const ADNFConfig& cfg);

// Applies absorb to every point in order; the result is order-dependent by
// design. The first invalid point aborts with its index in the error message.
// An empty sequence leaves the state untouched.
std::vector<AbsorptionReport> process_stream(std::span<const std::vector<double>> points,
                                             ModelState& state, const ADNFConfig& cfg);
std::vector<AbsorptionReport> process_stream(const FeatureMatrix& points, ModelState& state,
                                             const ADNFConfig& cfg);

}  // namespace adnf

#endif  // ADNF_STREAM_HPP
