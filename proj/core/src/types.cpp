#include "adnf/types.hpp"

#include <cmath>
#include <string>

namespace adnf {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw DataError("matrix must have at least one row and one column, got " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void check_finite(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw DataError("non-finite matrix entry at flat index " + std::to_string(i));
        }
    }
}

}  // namespace

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {
    check_shape(rows, cols);
}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    check_shape(rows, cols);
    if (values_.size() != rows * cols) {
        throw DimensionError("matrix value count " + std::to_string(values_.size()) +
                             " does not match shape " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    check_finite(values_);
}

FeatureMatrix FeatureMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw DataError("matrix must have at least one row");
    }
    const std::size_t cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionError("row " + std::to_string(r) + " has length " +
                                 std::to_string(rows[r].size()) + ", expected " +
                                 std::to_string(cols));
        }
        values.insert(values.end(), rows[r].begin(), rows[r].end());
    }
    return FeatureMatrix(rows.size(), cols, std::move(values));
}

void ADNFConfig::validate() const {
    if (c < 1) throw ConfigError("cluster count c must be >= 1");
    if (!(m0 > 1.0)) throw ConfigError("base fuzziness m0 must be > 1");
    if (!(lambda_min > 0.0) || lambda_min > 1.0) {
        throw ConfigError("lambda_min must lie in (0, 1]");
    }
    if (!(rho_merge > 0.0)) throw ConfigError("rho_merge must be > 0");
    if (k_sigma < 0.0) throw ConfigError("k_sigma must be >= 0");
    if (gamma < 0.0) throw ConfigError("gamma must be >= 0");
    if (!(eps_split > 0.0)) throw ConfigError("eps_split must be > 0");
    if (min_samples < 1) throw ConfigError("min_samples must be >= 1");
    if (min_split_cardinality < 1) throw ConfigError("min_split_cardinality must be >= 1");
    if (!(m_max > m0)) throw ConfigError("m_max must exceed m0");
    if (fcm_max_iter < 1) throw ConfigError("fcm_max_iter must be >= 1");
    if (!(fcm_tol > 0.0)) throw ConfigError("fcm_tol must be > 0");
    if (!(numeric_eps > 0.0)) throw ConfigError("numeric_eps must be > 0");
}

}  // namespace adnf
