#include <doctest.h>

#include <cmath>
#include <vector>

#include "adnf/adapt.hpp"
#include "adnf/stream.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using fixtures::make_cluster;
using fixtures::make_state;

namespace {

adnf::MicroCluster cluster_with_memberships(const std::vector<double>& memberships,
                                            double radius = 1.0) {
    adnf::MicroCluster mc = make_cluster({0.0}, 1.0, radius);
    for (double u : memberships) {
        mc.history.push_back(adnf::HistoryEntry{{0.0}, u});
    }
    return mc;
}

}  // namespace

TEST_SUITE("adapt") {

TEST_CASE("cluster_entropy: certain assignment contributes nothing") {
    adnf::ADNFConfig cfg;
    const adnf::MicroCluster mc = cluster_with_memberships({1.0});
    CHECK(adnf::cluster_entropy(mc, cfg) == 0.0);
}

TEST_CASE("cluster_entropy: two half memberships give ln 2") {
    adnf::ADNFConfig cfg;
    const adnf::MicroCluster mc = cluster_with_memberships({0.5, 0.5});
    CHECK(adnf::cluster_entropy(mc, cfg) == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("cluster_entropy: empty history gives zero, u = 0 near zero") {
    adnf::ADNFConfig cfg;
    CHECK(adnf::cluster_entropy(cluster_with_memberships({}), cfg) == 0.0);
    CHECK(adnf::cluster_entropy(cluster_with_memberships({0.0}), cfg) ==
          doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("cluster_entropy matches the brute-force summation oracle") {
    adnf::ADNFConfig cfg;
    fixtures::TestRng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> memberships;
        const std::size_t n = 1 + rng.index(200);
        for (std::size_t i = 0; i < n; ++i) {
            memberships.push_back(rng.uniform(0.0, 1.0));
        }
        const adnf::MicroCluster mc = cluster_with_memberships(memberships);
        const double expected = oracle::entropy(memberships, cfg.numeric_eps);
        CHECK(std::abs(adnf::cluster_entropy(mc, cfg) - expected) <= 1e-12);
        CHECK(adnf::cluster_entropy(mc, cfg) >= 0.0);
    }
}

TEST_CASE("compute_fti: zero entropy change gives zero") {
    adnf::ADNFConfig cfg;
    adnf::MicroCluster mc = cluster_with_memberships({0.5, 0.5});
    mc.prev_entropy = adnf::cluster_entropy(mc, cfg);
    mc.anchor_centroid = {5.0};  // large displacement, numerator still zero
    CHECK(adnf::compute_fti(mc, cfg) == 0.0);
}

TEST_CASE("compute_fti: hand-evaluated ratio 0.3 / 1.0") {
    adnf::ADNFConfig cfg;
    adnf::MicroCluster mc = cluster_with_memberships({0.5}, 0.8);
    const double h = adnf::cluster_entropy(mc, cfg);
    mc.prev_entropy = h - 0.3;
    mc.anchor_centroid = {0.1};  // ||dv|| = 0.1
    mc.prev_centroid = {-0.1};   // ||dP|| = 0.1
    CHECK(adnf::compute_fti(mc, cfg) == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("compute_fti: entropy decrease turns the index negative") {
    adnf::ADNFConfig cfg;
    adnf::MicroCluster mc = cluster_with_memberships({0.5});
    mc.prev_entropy = adnf::cluster_entropy(mc, cfg) + 1.0;
    CHECK(adnf::compute_fti(mc, cfg) < 0.0);
}

namespace {

// Builds a state whose clusters produce exactly the requested FTI values:
// trackers collapse the denominators to the radius (= 1), and a deep history
// keeps prev_entropy = H - target non-negative for any test target.
adnf::ModelState state_with_ftis(const std::vector<double>& ftis, const adnf::ADNFConfig& cfg) {
    std::vector<adnf::MicroCluster> clusters;
    const std::vector<double> memberships(40, 0.5);
    for (double target : ftis) {
        adnf::MicroCluster mc = cluster_with_memberships(memberships, 1.0);
        mc.prev_entropy = adnf::cluster_entropy(mc, cfg) - target;
        clusters.push_back(std::move(mc));
    }
    return make_state(std::move(clusters));
}

}  // namespace

TEST_CASE("tune_fuzziness: hand case {0.1, 0.2, 0.4} with m0 = 2") {
    adnf::ADNFConfig cfg;
    adnf::ModelState state = state_with_ftis({0.1, 0.2, 0.4}, cfg);
    const adnf::AdaptationReport report = adnf::tune_fuzziness(state, cfg);
    CHECK(report.median_fti == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(state.clusters[0].fuzziness == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(state.clusters[1].fuzziness == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(state.clusters[2].fuzziness == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("tune_fuzziness: the median cluster lands exactly on m0") {
    adnf::ADNFConfig cfg;
    cfg.m0 = 2.5;
    adnf::ModelState state = state_with_ftis({0.05, 0.3, 0.9}, cfg);
    (void)adnf::tune_fuzziness(state, cfg);
    CHECK(state.clusters[1].fuzziness == doctest::Approx(cfg.m0).epsilon(1e-9));
}

TEST_CASE("tune_fuzziness: non-positive FTI clamps just above 1") {
    adnf::ADNFConfig cfg;
    adnf::ModelState state = state_with_ftis({-0.4, 0.2, 0.6}, cfg);
    (void)adnf::tune_fuzziness(state, cfg);
    CHECK(state.clusters[0].fuzziness == doctest::Approx(1.0 + cfg.numeric_eps));
    CHECK(state.clusters[0].fuzziness > 1.0);
}

TEST_CASE("tune_fuzziness: vanishing median resets everything to m0") {
    adnf::ADNFConfig cfg;
    adnf::ModelState state = state_with_ftis({-0.5, 0.0, 0.3}, cfg);
    state.clusters[0].fuzziness = 4.0;
    const adnf::AdaptationReport report = adnf::tune_fuzziness(state, cfg);
    CHECK(report.median_fti <= cfg.numeric_eps);
    for (const adnf::MicroCluster& mc : state.clusters) {
        CHECK(mc.fuzziness == cfg.m0);
    }
}

TEST_CASE("tune_fuzziness: upper clamp at m_max") {
    adnf::ADNFConfig cfg;
    cfg.m_max = 3.0;
    adnf::ModelState state = state_with_ftis({0.01, 0.02, 5.0}, cfg);
    (void)adnf::tune_fuzziness(state, cfg);
    CHECK(state.clusters[2].fuzziness == cfg.m_max);
    for (const adnf::MicroCluster& mc : state.clusters) {
        CHECK(mc.fuzziness > 1.0);
        CHECK(mc.fuzziness <= cfg.m_max);
    }
}

TEST_CASE("tune_fuzziness: scale invariance of the median-normalised ratio") {
    adnf::ADNFConfig cfg;
    const std::vector<double> base{0.1, 0.25, 0.5, 0.7};
    adnf::ModelState a = state_with_ftis(base, cfg);
    std::vector<double> scaled;
    for (double f : base) scaled.push_back(3.7 * f);
    adnf::ModelState b = state_with_ftis(scaled, cfg);
    (void)adnf::tune_fuzziness(a, cfg);
    (void)adnf::tune_fuzziness(b, cfg);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(a.clusters[i].fuzziness ==
              doctest::Approx(b.clusters[i].fuzziness).epsilon(1e-9));
    }
}

TEST_CASE("tune_fuzziness: immediate second pass sees all FTI = 0") {
    adnf::ADNFConfig cfg;
    adnf::ModelState state = state_with_ftis({0.1, 0.3, 0.6}, cfg);
    (void)adnf::tune_fuzziness(state, cfg);
    const adnf::AdaptationReport second = adnf::tune_fuzziness(state, cfg);
    for (const adnf::AdaptationRow& row : second.rows) {
        CHECK(row.delta_entropy == 0.0);
        CHECK(row.delta_v == 0.0);
        CHECK(row.fti == 0.0);
    }
    // All-zero FTIs push the median through the m0 fallback.
    for (const adnf::MicroCluster& mc : state.clusters) {
        CHECK(mc.fuzziness == cfg.m0);
    }
}

TEST_CASE("tune_fuzziness rejects an empty model") {
    adnf::ADNFConfig cfg;
    adnf::ModelState empty;
    CHECK_THROWS_AS((void)adnf::tune_fuzziness(empty, cfg), adnf::DataError);
}

TEST_CASE("tuned fuzziness stays in (1, m_max] after real streaming") {
    adnf::ADNFConfig cfg;
    fixtures::TestRng rng(83);
    auto state = make_state({make_cluster({0.0, 0.0}, 1.0, 6.0),
                             make_cluster({9.0, 0.0}, 1.0, 6.0),
                             make_cluster({0.0, 9.0}, 1.0, 6.0)});
    for (int i = 0; i < 120; ++i) {
        const double cx = (i % 3 == 0) ? 0.0 : (i % 3 == 1 ? 9.0 : 0.0);
        const double cy = (i % 3 == 2) ? 9.0 : 0.0;
        (void)adnf::absorb(std::vector<double>{cx + rng.uniform(-2, 2), cy + rng.uniform(-2, 2)},
                           state, cfg);
    }
    const adnf::AdaptationReport report = adnf::tune_fuzziness(state, cfg);
    for (const adnf::AdaptationRow& row : report.rows) {
        CHECK(row.new_fuzziness > 1.0);
        CHECK(row.new_fuzziness <= cfg.m_max);
    }
    for (const adnf::MicroCluster& mc : state.clusters) {
        CHECK(mc.prev_entropy == mc.entropy);
        CHECK(mc.anchor_centroid == mc.centroid);
    }
}

}  // TEST_SUITE
