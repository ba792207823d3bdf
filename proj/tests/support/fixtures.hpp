// Shared builders for unit tests.
#ifndef ADNF_TESTS_FIXTURES_HPP
#define ADNF_TESTS_FIXTURES_HPP

#include <cmath>
#include <random>
#include <vector>

#include "adnf/adnf.hpp"

namespace fixtures {

// Micro-cluster with trackers anchored at the current values, ready for
// streaming or adaptation tests.
inline adnf::MicroCluster make_cluster(std::vector<double> centroid, double density,
                                       double radius, double fuzziness = 2.0) {
    adnf::MicroCluster mc;
    mc.centroid = centroid;
    mc.density = density;
    mc.fuzzy_count = density;
    mc.radius = radius;
    mc.fuzziness = fuzziness;
    mc.prev_centroid = centroid;
    mc.anchor_centroid = std::move(centroid);
    mc.prev_density = density;
    return mc;
}

inline adnf::ModelState make_state(std::vector<adnf::MicroCluster> clusters) {
    adnf::ModelState state;
    state.clusters = std::move(clusters);
    return state;
}

// Deterministic uniform doubles for test data.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

inline adnf::FeatureMatrix random_matrix(std::size_t rows, std::size_t cols, TestRng& rng,
                                         double lo = -5.0, double hi = 5.0) {
    adnf::FeatureMatrix x(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            x(r, c) = rng.uniform(lo, hi);
        }
    }
    return x;
}

inline std::vector<std::vector<double>> to_rows(const adnf::FeatureMatrix& x) {
    std::vector<std::vector<double>> rows;
    rows.reserve(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        rows.emplace_back(x.row(r).begin(), x.row(r).end());
    }
    return rows;
}

// Bit-for-bit equality of every numeric field, history included.
inline bool states_identical(const adnf::ModelState& a, const adnf::ModelState& b) {
    if (a.clusters.size() != b.clusters.size() || a.d_max != b.d_max || a.p_max != b.p_max ||
        a.step != b.step) {
        return false;
    }
    for (std::size_t i = 0; i < a.clusters.size(); ++i) {
        const adnf::MicroCluster& x = a.clusters[i];
        const adnf::MicroCluster& y = b.clusters[i];
        if (x.centroid != y.centroid || x.density != y.density ||
            x.fuzzy_count != y.fuzzy_count || x.radius != y.radius ||
            x.fuzziness != y.fuzziness || x.entropy != y.entropy ||
            x.prev_entropy != y.prev_entropy || x.prev_centroid != y.prev_centroid ||
            x.anchor_centroid != y.anchor_centroid || x.prev_density != y.prev_density ||
            x.last_update_step != y.last_update_step ||
            x.history.size() != y.history.size()) {
            return false;
        }
        for (std::size_t h = 0; h < x.history.size(); ++h) {
            if (x.history[h].point != y.history[h].point ||
                x.history[h].membership != y.history[h].membership) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace fixtures

#endif  // ADNF_TESTS_FIXTURES_HPP
