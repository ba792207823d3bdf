#ifndef ADNF_PCA_HPP
#define ADNF_PCA_HPP

#include <cstddef>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

// Principal component basis: orthonormal rows sorted by non-increasing
// explained variance. Sign convention: each component's largest-magnitude
// entry is positive (ties resolved toward the earliest index), which makes
// fitted bases reproducible.
struct PcaModel {
    std::vector<double> mean;
    FeatureMatrix components;                // k x d
    std::vector<double> explained_variance;  // k entries, non-increasing, >= 0
};

// Top-k eigenpairs of the sample covariance (divisor N - 1), computed with a
// cyclic Jacobi eigensolver. Requires 1 <= k <= min(N - 1, d); throws
// ConfigError otherwise.
PcaModel fit_pca(const FeatureMatrix& x, std::size_t k);

// Projects (x - mean) onto the component rows, giving an N x k matrix.
FeatureMatrix transform(const PcaModel& model, const FeatureMatrix& x);

}  // namespace adnf

#endif  // ADNF_PCA_HPP
