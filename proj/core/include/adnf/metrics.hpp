#ifndef ADNF_METRICS_HPP
#define ADNF_METRICS_HPP

#include <span>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

// Nearest-centroid hard assignment; ties go to the lowest cluster index.
// Throws DataError on an empty model.
std::vector<int> hard_assign(const FeatureMatrix& x, const ModelState& state);

// Mean silhouette over all points: s = (b - a) / max(a, b) with a the mean
// intra-cluster distance (excluding self) and b the smallest mean distance to
// any other cluster. Points in singleton clusters score 0. Full O(N^2)
// pairwise distances, no sampling.
// Throws DataError with fewer than two distinct labels.
double silhouette(const FeatureMatrix& x, std::span<const int> labels);

}  // namespace adnf

#endif  // ADNF_METRICS_HPP
