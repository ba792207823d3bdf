#include <benchmark/benchmark.h>

#include <vector>

#include "adnf/adnf.hpp"

namespace {

adnf::FeatureMatrix blobs(std::size_t n, std::size_t d, std::uint64_t seed) {
    adnf::SyntheticStreamSpec spec;
    spec.seed = seed;
    spec.count = n;
    std::vector<double> near(d, 0.0);
    std::vector<double> far(d, 0.0);
    far[0] = 10.0;
    spec.components.push_back(adnf::MixtureComponent{near, 1.0, 0.5, {}});
    spec.components.push_back(adnf::MixtureComponent{far, 1.0, 0.5, {}});
    return adnf::generate_stream(spec).points;
}

void BM_fit_fcm(benchmark::State& state) {
    const adnf::FeatureMatrix x = blobs(500, 8, 1);
    adnf::ADNFConfig cfg;
    cfg.c = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(adnf::fit_fcm(x, cfg, 7));
    }
}
BENCHMARK(BM_fit_fcm)->Unit(benchmark::kMillisecond);

void BM_absorb(benchmark::State& state) {
    const adnf::FeatureMatrix x = blobs(200, 8, 2);
    adnf::ADNFConfig cfg;
    cfg.c = 8;
    const adnf::FuzzyPartition p = adnf::fit_fcm(x, cfg, 3);
    const adnf::ModelState base = adnf::init_micro_clusters(x, p, cfg);
    const std::vector<double> point(8, 0.5);
    for (auto _ : state) {
        adnf::ModelState working = base;
        benchmark::DoNotOptimize(adnf::absorb(point, working, cfg));
    }
}
BENCHMARK(BM_absorb)->Unit(benchmark::kMicrosecond);

void BM_dbscan(benchmark::State& state) {
    const adnf::FeatureMatrix x = blobs(static_cast<std::size_t>(state.range(0)), 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(adnf::dbscan(x, 0.8, 4));
    }
}
BENCHMARK(BM_dbscan)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_silhouette(benchmark::State& state) {
    const adnf::FeatureMatrix x = blobs(400, 2, 4);
    std::vector<int> labels(400);
    for (std::size_t j = 0; j < 400; ++j) labels[j] = x(j, 0) > 5.0 ? 1 : 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(adnf::silhouette(x, labels));
    }
}
BENCHMARK(BM_silhouette)->Unit(benchmark::kMillisecond);

void BM_fit_pca(benchmark::State& state) {
    const adnf::FeatureMatrix x = blobs(200, 32, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(adnf::fit_pca(x, 10));
    }
}
BENCHMARK(BM_fit_pca)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
