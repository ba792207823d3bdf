#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "adnf/adapt.hpp"
#include "adnf/fcm.hpp"
#include "adnf/io.hpp"
#include "adnf/stream.hpp"
#include "adnf/topology.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using adnf::FeatureMatrix;

namespace {

// Scratch directory wiped per test case.
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("adnf_io_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
    fs::path file(const std::string& name) const { return path / name; }
};

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("load_features parses plain CSV") {
    TempDir dir;
    write_text(dir.file("m.csv"), "0,1\n2,3\n");
    const FeatureMatrix x = adnf::load_features(dir.file("m.csv"));
    REQUIRE(x.rows() == 2);
    REQUIRE(x.cols() == 2);
    CHECK(x(0, 0) == 0.0);
    CHECK(x(0, 1) == 1.0);
    CHECK(x(1, 0) == 2.0);
    CHECK(x(1, 1) == 3.0);
}

TEST_CASE("load_features errors carry line numbers") {
    TempDir dir;
    write_text(dir.file("ragged.csv"), "0,1\n2\n");
    try {
        (void)adnf::load_features(dir.file("ragged.csv"));
        FAIL("expected a parse error");
    } catch (const adnf::ParseError& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    write_text(dir.file("alpha.csv"), "0,1\n2,zebra\n");
    try {
        (void)adnf::load_features(dir.file("alpha.csv"));
        FAIL("expected a parse error");
    } catch (const adnf::ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find(":2") != std::string::npos);
        CHECK(what.find("zebra") != std::string::npos);
    }

    write_text(dir.file("empty.csv"), "");
    CHECK_THROWS_AS((void)adnf::load_features(dir.file("empty.csv")), adnf::ParseError);
    CHECK_THROWS_AS((void)adnf::load_features(dir.file("missing.csv")), adnf::ParseError);
}

TEST_CASE("load_features reads JSON arrays") {
    TempDir dir;
    write_text(dir.file("m.json"), "[[0, 1.5], [2, -3]]");
    const FeatureMatrix x = adnf::load_features(dir.file("m.json"));
    REQUIRE(x.rows() == 2);
    CHECK(x(0, 1) == 1.5);
    CHECK(x(1, 1) == -3.0);

    write_text(dir.file("bad.json"), "[[0, \"x\"]]");
    CHECK_THROWS_AS((void)adnf::load_features(dir.file("bad.json")), adnf::ParseError);
}

TEST_CASE("feature round-trip is exact") {
    TempDir dir;
    fixtures::TestRng rng(151);
    const FeatureMatrix x = fixtures::random_matrix(23, 5, rng, -1e6, 1e6);
    adnf::save_features(x, dir.file("rt.csv"));
    const FeatureMatrix back = adnf::load_features(dir.file("rt.csv"));
    REQUIRE(back.rows() == x.rows());
    REQUIRE(back.cols() == x.cols());
    CHECK(back.values() == x.values());  // bit-exact via %.17g
}

TEST_CASE("label file round-trip and validation") {
    TempDir dir;
    const std::vector<int> labels{0, 1, 1, -1, 2};
    adnf::save_labels(labels, dir.file("l.csv"));
    CHECK(adnf::load_labels(dir.file("l.csv")) == labels);

    write_text(dir.file("bad.csv"), "1\ntwo\n");
    CHECK_THROWS_AS((void)adnf::load_labels(dir.file("bad.csv")), adnf::ParseError);
}

TEST_CASE("model snapshot round-trips bit-exactly") {
    TempDir dir;
    fixtures::TestRng rng(157);
    const FeatureMatrix x = fixtures::random_matrix(40, 3, rng);
    adnf::ADNFConfig cfg;
    cfg.c = 3;
    const adnf::FuzzyPartition p = adnf::fit_fcm(x, cfg, 9);
    adnf::ModelState state = adnf::init_micro_clusters(x, p, cfg);

    SUBCASE("fresh state") {}
    SUBCASE("after streaming, adaptation and refinement") {
        for (int i = 0; i < 50; ++i) {
            (void)adnf::absorb(std::vector<double>{rng.uniform(-6, 6), rng.uniform(-6, 6),
                                                   rng.uniform(-6, 6)},
                               state, cfg);
        }
        const adnf::AdaptationReport rep = adnf::tune_fuzziness(state, cfg);
        std::vector<double> ftis;
        for (const adnf::AdaptationRow& row : rep.rows) ftis.push_back(row.fti);
        (void)adnf::refine(state, ftis, cfg);
    }

    adnf::save_model(state, cfg, dir.file("model.json"));
    const adnf::LoadedModel loaded = adnf::load_model(dir.file("model.json"));
    CHECK(fixtures::states_identical(state, loaded.state));
    CHECK(loaded.config.c == cfg.c);
    CHECK(loaded.config.m0 == cfg.m0);
    CHECK(loaded.config.numeric_eps == cfg.numeric_eps);
}

TEST_CASE("snapshot version and truncation are rejected") {
    TempDir dir;
    write_text(dir.file("v9.json"),
               R"({"version": 9, "config": {}, "clusters": [], "d_max": 0, "p_max": 0, "step": 0})");
    try {
        (void)adnf::load_model(dir.file("v9.json"));
        FAIL("expected a version error");
    } catch (const adnf::ParseError& e) {
        CHECK(std::string(e.what()).find("version") != std::string::npos);
    }

    write_text(dir.file("trunc.json"), R"({"version": 1, "clusters": [{"centroid": [1.0)");
    CHECK_THROWS_AS((void)adnf::load_model(dir.file("trunc.json")), adnf::ParseError);
}

TEST_CASE("generate_stream: zero std follows the drifting mean path") {
    adnf::SyntheticStreamSpec spec;
    spec.seed = 5;
    spec.count = 10;
    spec.components.push_back(adnf::MixtureComponent{{1.0, 2.0}, 0.0, 1.0, {10.0, 0.0}});
    const adnf::GeneratedStream stream = adnf::generate_stream(spec);
    for (std::size_t t = 0; t < 10; ++t) {
        const double progress = static_cast<double>(t) / 10.0;
        CHECK(stream.points(t, 0) == doctest::Approx(1.0 + 10.0 * progress).epsilon(1e-12));
        CHECK(stream.points(t, 1) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(stream.components[t] == 0);
    }
}

TEST_CASE("generate_stream is deterministic per seed") {
    adnf::SyntheticStreamSpec spec;
    spec.seed = 99;
    spec.count = 50;
    spec.components.push_back(adnf::MixtureComponent{{0.0}, 1.0, 0.5, {}});
    spec.components.push_back(adnf::MixtureComponent{{10.0}, 1.0, 0.5, {}});
    const adnf::GeneratedStream a = adnf::generate_stream(spec);
    const adnf::GeneratedStream b = adnf::generate_stream(spec);
    CHECK(a.points.values() == b.points.values());
    CHECK(a.components == b.components);

    spec.seed = 100;
    const adnf::GeneratedStream c = adnf::generate_stream(spec);
    CHECK(a.points.values() != c.points.values());
}

TEST_CASE("stream spec validation") {
    adnf::SyntheticStreamSpec spec;
    spec.count = 10;
    CHECK_THROWS_AS(spec.validate(), adnf::ConfigError);  // no components

    spec.components.push_back(adnf::MixtureComponent{{0.0}, 1.0, 0.7, {}});
    CHECK_THROWS_AS(spec.validate(), adnf::ConfigError);  // weights != 1

    spec.components.push_back(adnf::MixtureComponent{{1.0}, 1.0, 0.3, {}});
    CHECK_NOTHROW(spec.validate());

    spec.components[0].stddev = -1.0;
    CHECK_THROWS_AS(spec.validate(), adnf::ConfigError);
}

TEST_CASE("load_stream_spec and load_config from JSON") {
    TempDir dir;
    write_text(dir.file("spec.json"), R"({
        "seed": 42, "count": 30,
        "components": [
            {"mean": [0, 0], "std": 0.5, "weight": 0.6},
            {"mean": [5, 5], "std": 0.5, "weight": 0.4, "drift": [1, 0]}
        ]})");
    const adnf::SyntheticStreamSpec spec = adnf::load_stream_spec(dir.file("spec.json"));
    CHECK(spec.seed == 42);
    CHECK(spec.count == 30);
    REQUIRE(spec.components.size() == 2);
    CHECK(spec.components[1].drift == std::vector<double>{1.0, 0.0});

    write_text(dir.file("cfg.json"), R"({"c": 4, "m0": 1.8, "history_cap": 128})");
    const adnf::ADNFConfig cfg = adnf::load_config(dir.file("cfg.json"));
    CHECK(cfg.c == 4);
    CHECK(cfg.m0 == 1.8);
    CHECK(cfg.history_cap == 128);
    CHECK(cfg.lambda_min == adnf::ADNFConfig{}.lambda_min);  // untouched default

    write_text(dir.file("bad.json"), R"({"unknown_knob": 1})");
    CHECK_THROWS_AS((void)adnf::load_config(dir.file("bad.json")), adnf::ParseError);
}

TEST_CASE("persistence preserves subsequent streaming behaviour") {
    TempDir dir;
    fixtures::TestRng rng(163);
    const FeatureMatrix x = fixtures::random_matrix(30, 2, rng);
    adnf::ADNFConfig cfg;
    const adnf::FuzzyPartition p = adnf::fit_fcm(x, cfg, 4);
    adnf::ModelState live = adnf::init_micro_clusters(x, p, cfg);

    std::vector<std::vector<double>> tail;
    for (int i = 0; i < 40; ++i) {
        tail.push_back({rng.uniform(-8, 8), rng.uniform(-8, 8)});
    }

    adnf::save_model(live, cfg, dir.file("mid.json"));
    adnf::LoadedModel restored = adnf::load_model(dir.file("mid.json"));

    (void)adnf::process_stream(tail, live, cfg);
    (void)adnf::process_stream(tail, restored.state, restored.config);
    CHECK(fixtures::states_identical(live, restored.state));
}

}  // TEST_SUITE
