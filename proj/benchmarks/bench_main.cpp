#include <benchmark/benchmark.h>

#include <random>

#include "wxcompress/compress.hpp"
#include "wxcompress/geo_graph.hpp"
#include "wxcompress/spectral.hpp"

using namespace wxc;

namespace {

SiteIndex make_sites(int n) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> lat(25.0, 45.0), lon(-124.0, -67.0);
    SiteIndex idx;
    for (int i = 0; i < n; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "S%05d", i);
        idx.sites.push_back({buf, lat(rng), lon(rng)});
    }
    idx.fingerprint = fingerprint_sites(idx.sites);
    return idx;
}

void BM_BuildGraph(benchmark::State& state) {
    auto sites = make_sites(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto g = build_graph(sites, 70.0);
        benchmark::DoNotOptimize(g.edges.size());
    }
}
BENCHMARK(BM_BuildGraph)->Arg(500)->Arg(1000)->Arg(2500);

void BM_Eigendecompose(benchmark::State& state) {
    auto sites = make_sites(static_cast<int>(state.range(0)));
    auto g = build_graph(sites, 70.0);
    auto L = laplacian(g);
    for (auto _ : state) {
        auto basis = eigendecompose(L, sites, 70.0);
        benchmark::DoNotOptimize(basis.eigenvalues.sum());
    }
}
BENCHMARK(BM_Eigendecompose)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AnalyzeAndCurve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto sites = make_sites(n);
    auto g = build_graph(sites, 70.0);
    auto basis = eigendecompose(laplacian(g), sites, 70.0);
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss;
    SceneVector scene;
    scene.quantity = WeatherQuantity::Temperature;
    scene.site_fingerprint = sites.fingerprint;
    scene.values.resize(n);
    for (int i = 0; i < n; ++i) scene.values(i) = gauss(rng);
    std::vector<int> ks;
    for (int k = 0; k <= n; k += 10) ks.push_back(k);
    for (auto _ : state) {
        auto c = analyze(basis, scene);
        auto curve = compressibility_curve(c, ks);
        benchmark::DoNotOptimize(curve.points.back().second);
    }
}
BENCHMARK(BM_AnalyzeAndCurve)->Arg(500)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
