#ifndef ADNF_TYPES_HPP
#define ADNF_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "adnf/errors.hpp"

namespace adnf {

// Dense row-major matrix of feature vectors: rows = samples, cols = dimensions.
// The row index is the sample identity. Also reused for membership matrices
// (clusters x points) and centroid matrices (clusters x dimensions).
class FeatureMatrix {
public:
    // Zero-filled rows x cols matrix.
    FeatureMatrix(std::size_t rows, std::size_t cols);

    // Takes ownership of `values` (row-major, rows*cols entries, all finite).
    FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    // Builds from equal-length rows; validates shape and finiteness.
    static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(values_.data() + r * cols_, cols_);
    }
    std::span<double> row(std::size_t r) {
        return std::span<double>(values_.data() + r * cols_, cols_);
    }

    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

// All hyperparameters of the pipeline. history_cap == 0 means unbounded.
struct ADNFConfig {
    std::size_t c = 2;                      // initial cluster count
    double m0 = 2.0;                        // base fuzziness, > 1
    double lambda_min = 0.05;               // learning-rate floor, in (0, 1]
    double rho_merge = 0.5;                 // merge threshold factor, > 0
    double k_sigma = 0.5;                   // split threshold std multiplier, >= 0
    double gamma = 0.5;                     // FTI coupling in the split threshold, >= 0
    double eps_split = 0.5;                 // DBSCAN radius for splitting, > 0
    std::size_t min_samples = 3;            // DBSCAN core-point neighbour count
    std::size_t min_split_cardinality = 3;  // minimum size of a new subcluster
    double m_max = 5.0;                     // upper clamp on adapted fuzziness, > m0
    std::size_t fcm_max_iter = 300;
    double fcm_tol = 1e-5;                  // max-abs membership change stop rule
    double numeric_eps = 1e-10;             // guard inside logs and denominators
    std::size_t history_cap = 0;            // per-cluster history length, 0 = unbounded

    // Throws ConfigError on any out-of-range field.
    void validate() const;
};

// One logged assignment: the absorbed point and its membership in [0, 1].
struct HistoryEntry {
    std::vector<double> point;
    double membership = 0.0;
};

// Compact online summary of a local data region.
//
// The prev_*/anchor_* trackers feed the dynamic learning rate and the fuzzy
// temporal index: prev_centroid/prev_density snapshot the state immediately
// before the most recent absorption; anchor_centroid/prev_entropy snapshot
// the state at the last adaptation pass.
struct MicroCluster {
    std::vector<double> centroid;
    double density = 0.0;      // accumulated sum of u^m
    double fuzzy_count = 0.0;  // n_i, tracks density under the update rules
    double radius = 0.0;       // sensitivity radius for absorption, > 0
    double fuzziness = 2.0;    // per-cluster m, > 1 always
    double entropy = 0.0;      // running history entropy
    double prev_entropy = 0.0;
    std::vector<double> prev_centroid;
    std::vector<double> anchor_centroid;
    double prev_density = 0.0;
    std::vector<HistoryEntry> history;
    std::size_t last_update_step = 0;
};

// The evolving model: micro-clusters plus global normalisers for the
// learning rate (running maxima of |delta density| and ||delta centroid||).
struct ModelState {
    std::vector<MicroCluster> clusters;
    double d_max = 0.0;
    double p_max = 0.0;
    std::size_t step = 0;
};

}  // namespace adnf

#endif  // ADNF_TYPES_HPP
