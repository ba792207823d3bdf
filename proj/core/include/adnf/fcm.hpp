#ifndef ADNF_FCM_HPP
#define ADNF_FCM_HPP

#include <cstdint>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

// Result of batch fuzzy c-means: memberships U (clusters x points, every
// column sums to 1), centroids V (clusters x dims) and the objective
// J = sum_j sum_i u_ij^m ||x_j - v_i||^2 at the final iterate.
struct FuzzyPartition {
    FeatureMatrix memberships;
    FeatureMatrix centroids;
    double objective = 0.0;
    std::size_t iterations_run = 0;
    std::vector<double> objective_history;  // J after each iteration
};

// Membership update u_ij = [ sum_k (||x_j - v_i|| / ||x_j - v_k||)^(2/(m-1)) ]^-1.
// A point coinciding with one or more centroids splits its membership equally
// among the coinciding centroids and gets 0 elsewhere.
// Throws ConfigError if m <= 1.
FeatureMatrix fcm_memberships(const FeatureMatrix& x, const FeatureMatrix& centroids, double m);

// Centroid update v_i = sum_j u_ij^m x_j / sum_j u_ij^m.
// Throws DataError if a cluster's weights all vanish.
FeatureMatrix fcm_centroids(const FeatureMatrix& x, const FeatureMatrix& memberships, double m,
                            double numeric_eps = 1e-10);

double fcm_objective(const FeatureMatrix& x, const FeatureMatrix& memberships,
                     const FeatureMatrix& centroids, double m);

// Alternating optimisation from a seeded random column-stochastic membership
// matrix until the max-abs membership change drops below cfg.fcm_tol or
// cfg.fcm_max_iter is reached. Deterministic for a fixed seed.
// Throws DataError if x has fewer rows than cfg.c.
FuzzyPartition fit_fcm(const FeatureMatrix& x, const ADNFConfig& cfg, std::uint64_t seed);

// Wraps each centroid of a converged partition into a micro-cluster:
// density = sum_j u_ij^m0, one global percentile radius, fuzziness m0, and a
// history logging every point with its membership. Propagates the
// degenerate-radius error from percentile_radius.
ModelState init_micro_clusters(const FeatureMatrix& x, const FuzzyPartition& partition,
                               const ADNFConfig& cfg);

}  // namespace adnf

#endif  // ADNF_FCM_HPP
