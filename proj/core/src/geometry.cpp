#include "adnf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adnf/errors.hpp"

namespace adnf {

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double percentile_sorted(std::span<const double> sorted_values, double p) {
    if (sorted_values.empty()) {
        throw DataError("percentile of an empty list is undefined");
    }
    const std::size_t n = sorted_values.size();
    if (n == 1) {
        return sorted_values[0];
    }
    const double pos = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[hi] - sorted_values[lo]);
}

double percentile_radius(const FeatureMatrix& x) {
    const std::size_t n = x.rows();
    if (n < 2) {
        throw DataError("percentile radius needs at least 2 points, got " + std::to_string(n));
    }
    std::vector<double> dists;
    dists.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            dists.push_back(euclidean_distance(x.row(i), x.row(j)));
        }
    }
    std::sort(dists.begin(), dists.end());
    const double p10 = percentile_sorted(dists, 0.10);
    const double p90 = percentile_sorted(dists, 0.90);
    const double radius = 0.5 * (p10 + p90);
    if (!(radius > 0.0)) {
        throw DataError("degenerate radius: all points coincide");
    }
    return radius;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw DataError("median of an empty list is undefined");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double population_stddev(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    const double mu = mean(values);
    double sq = 0.0;
    for (double v : values) {
        const double d = v - mu;
        sq += d * d;
    }
    return std::sqrt(sq / static_cast<double>(values.size()));
}

}  // namespace adnf
