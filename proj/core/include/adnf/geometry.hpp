#ifndef ADNF_GEOMETRY_HPP
#define ADNF_GEOMETRY_HPP

#include <span>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

// l2 norm of a - b. Throws DimensionError on length mismatch.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

// Percentile by linear interpolation between closest ranks on an ascending
// sorted list: index = p * (n - 1), p in [0, 1].
double percentile_sorted(std::span<const double> sorted_values, double p);

// Sensitivity radius of a batch: mean of the 10th and 90th percentiles of
// all N(N-1)/2 pairwise distances. Throws DataError if N < 2 or if the
// radius degenerates to zero (all points coincide).
double percentile_radius(const FeatureMatrix& x);

// Sample median; even counts average the two middle elements.
// Throws DataError on empty input.
double median(std::vector<double> values);

double mean(std::span<const double> values);

// Population standard deviation (divisor n).
double population_stddev(std::span<const double> values);

}  // namespace adnf

#endif  // ADNF_GEOMETRY_HPP
