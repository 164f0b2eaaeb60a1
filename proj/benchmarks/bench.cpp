#include <benchmark/benchmark.h>

#include "hc/supermodule.hpp"
#include "hc/verify.hpp"

namespace {

hc::WeightVector wv(std::vector<int> entries, std::uint32_t p = 0) {
    hc::WeightVector w;
    w.p = p;
    w.entries = std::move(entries);
    return w;
}

void BM_NormalFormBraidWord(benchmark::State& state) {
    using G = hc::Generator;
    std::vector<G> word;
    for (int i = 0; i < state.range(0); ++i) {
        word.push_back(G::s(1 + i % 3));
        word.push_back(G::x(1 + i % 4));
    }
    for (auto _ : state) {
        auto e = hc::normal_form(word, 4, 0);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_NormalFormBraidWord)->Arg(2)->Arg(4)->Arg(6);

void BM_IntertwinerSquare(benchmark::State& state) {
    auto phi = hc::intertwiner(1, 3, 0);
    for (auto _ : state) {
        auto sq = phi * phi;
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_IntertwinerSquare);

void BM_BuildSeminormal(benchmark::State& state) {
    auto w = wv({0, 2, 4, 1});
    for (auto _ : state) {
        auto d = hc::build_D(w);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_BuildSeminormal);

void BM_RelationSuite(benchmark::State& state) {
    auto d = hc::build_D(wv({0, 2, 4, 1}));
    for (auto _ : state) {
        auto rep = hc::verify_module(d);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_RelationSuite);

void BM_Commutant(benchmark::State& state) {
    auto d = hc::build_D(wv({0, 2, 4}));
    for (auto _ : state) {
        auto endo = hc::end_dimension(d);
        benchmark::DoNotOptimize(endo);
    }
}
BENCHMARK(BM_Commutant);

}  // namespace

BENCHMARK_MAIN();
