#include <benchmark/benchmark.h>

#include <random>

#include "gkd/gkdim.hpp"
#include "gkd/reducibility.hpp"
#include "gkd/tableau.hpp"

namespace {

gkd::Sequence random_sequence(size_t length, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numer(-12, 12);
    std::uniform_int_distribution<int> denom(1, 6);
    gkd::Sequence seq;
    seq.reserve(length);
    for (size_t i = 0; i < length; ++i)
        seq.emplace_back(numer(rng), denom(rng));
    return seq;
}

void BM_RsShape(benchmark::State& state) {
    gkd::Sequence seq = random_sequence(static_cast<size_t>(state.range(0)), 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(gkd::rs_shape(seq));
}
BENCHMARK(BM_RsShape)->Arg(16)->Arg(64)->Arg(256);

void BM_GreeneShape(benchmark::State& state) {
    gkd::Sequence seq = random_sequence(static_cast<size_t>(state.range(0)), 29);
    for (auto _ : state)
        benchmark::DoNotOptimize(gkd::greene_shape(seq));
}
BENCHMARK(BM_GreeneShape)->Arg(8)->Arg(12);

void BM_GkDimension(benchmark::State& state) {
    gkd::LieType type(gkd::LieKind::B, static_cast<int>(state.range(0)));
    gkd::Weight w = random_sequence(static_cast<size_t>(state.range(0)), 41);
    for (auto _ : state)
        benchmark::DoNotOptimize(gkd::gk_dimension(type, w));
}
BENCHMARK(BM_GkDimension)->Arg(4)->Arg(8)->Arg(16);

void BM_Scan(benchmark::State& state) {
    gkd::LieType type(gkd::LieKind::B, static_cast<int>(state.range(0)));
    gkd::Window window{gkd::Rational(-8), gkd::Rational(8)};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gkd::first_reducible_point(type, 2, gkd::Rational(1, 2), window));
}
BENCHMARK(BM_Scan)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
