// Microbenchmarks comparing the three decision engines and the growth
// families. The CLI `polgame bench` emits cross-engine reports; these are the
// finer-grained wall-clock curves.

#include <benchmark/benchmark.h>

#include "polgame/eval_dp.hpp"
#include "polgame/eval_linear.hpp"
#include "polgame/eval_naive.hpp"
#include "polgame/expand.hpp"

using namespace polgame;

namespace {

// left-deep par chain with `links` copies of {a:()}; AST size 2*links + 1
FormulaPtr par_chain(std::size_t links) {
    FormulaPtr acc = Formula::zero();
    auto unitp = Formula::player_literal({{"a", Formula::one()}});
    for (std::size_t i = 0; i < links; ++i) acc = Formula::make_par(acc, unitp);
    return acc;
}

FormulaPtr nested_bang(unsigned n) {
    std::string text = "( " + std::to_string(n) + " : { " + std::to_string(n) + " : () } )";
    return Formula::make_bang(parse_formula(text));
}

void BM_LinearChain(benchmark::State& state) {
    auto f = par_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(linear_value(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LinearChain)->RangeMultiplier(2)->Range(1 << 10, 1 << 17)->Complexity();

void BM_LinearBang(benchmark::State& state) {
    auto f = nested_bang(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(linear_value(f));
}
BENCHMARK(BM_LinearBang)->DenseRange(2, 7);

void BM_NaiveBang(benchmark::State& state) {
    auto f = nested_bang(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        auto tree = expand(f, 8'000'000);
        benchmark::DoNotOptimize(has_strategy(tree));
    }
}
BENCHMARK(BM_NaiveBang)->DenseRange(2, 5); // 6+ blows the expansion budget

void BM_DpRandom(benchmark::State& state) {
    auto f = random_formula(static_cast<unsigned>(state.range(0)), 3, Polarity::opponent, 12345,
                            false);
    for (auto _ : state) benchmark::DoNotOptimize(eval_dp(f).verdict);
}
BENCHMARK(BM_DpRandom)->DenseRange(3, 6);

void BM_NaiveRandom(benchmark::State& state) {
    auto f = random_formula(static_cast<unsigned>(state.range(0)), 3, Polarity::opponent, 12345,
                            false);
    for (auto _ : state) {
        auto tree = expand(f, 8'000'000);
        benchmark::DoNotOptimize(has_strategy(tree));
    }
}
BENCHMARK(BM_NaiveRandom)->DenseRange(3, 6);

void BM_GrowthParChains(benchmark::State& state) {
    // par(L_{2n}, L_{2n}) has binomial leaf count despite zero-usize operands
    unsigned n = static_cast<unsigned>(state.range(0));
    FormulaPtr l = Formula::zero();
    for (unsigned i = 0; i < n; ++i)
        l = Formula::player_literal(
            {{"_1", Formula::opponent_literal({{"_1", l}})}});
    auto f = Formula::make_par(l, l);
    for (auto _ : state) {
        auto tree = expand(f, 8'000'000);
        benchmark::DoNotOptimize(measure(tree).usize);
    }
}
BENCHMARK(BM_GrowthParChains)->DenseRange(2, 8);

} // namespace

BENCHMARK_MAIN();
