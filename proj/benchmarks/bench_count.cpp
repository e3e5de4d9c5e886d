#include "radcount/basis.hpp"
#include "radcount/canonical.hpp"
#include "radcount/count.hpp"
#include "radcount/field.hpp"
#include "radcount/matrix.hpp"
#include "radcount/polynomial.hpp"
#include "radcount/quiver.hpp"
#include "radcount/verify.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace radcount;

namespace {

QuiverWithD make_chain(const std::vector<long>& d) {
    int n = static_cast<int>(d.size());
    std::vector<std::string> ids;
    std::vector<Arrow> arrows;
    for (int v = 0; v < n; ++v) ids.push_back(std::to_string(v + 1));
    for (int v = 0; v + 1 < n; ++v) arrows.push_back({"a" + std::to_string(v), v, v + 1});
    Quiver q(std::move(ids), std::move(arrows));
    SummandVector sd(q, d);
    return {std::move(q), std::move(sd)};
}

void BM_rank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    const FieldTable& F = make_field(3);
    SplitMix64 rng(1);
    FqMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, static_cast<Fq>(rng.below(3)));
    std::vector<Fq> scratch;
    for (auto _ : state) benchmark::DoNotOptimize(rank_with_scratch(F, m, scratch));
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32);

void BM_count_unit_chain(benchmark::State& state) {
    auto [q, d] = make_chain(std::vector<long>(state.range(0), 1));
    CountOptions opts;
    opts.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(count_commuting(q, d, 2, opts).value);
}
BENCHMARK(BM_count_unit_chain)->Arg(3)->Arg(4)->Arg(5);

void BM_count_weighted_chain(benchmark::State& state) {
    auto [q, d] = make_chain({2, 1, 2}); // dim rad 8
    CountOptions opts;
    opts.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(count_commuting(q, d, 3, opts).value);
}
BENCHMARK(BM_count_weighted_chain);

void BM_naive_oracle(benchmark::State& state) {
    auto [q, d] = make_chain({1, 1, 1});
    CountOptions opts;
    opts.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(naive_pair_count(q, d, 2, opts).value);
}
BENCHMARK(BM_naive_oracle);

void BM_a3_closed_form(benchmark::State& state) {
    long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(a3_count_poly(k, k, k));
}
BENCHMARK(BM_a3_closed_form)->Arg(2)->Arg(4)->Arg(8);

void BM_canonical_hash(benchmark::State& state) {
    SplitMix64 rng(7);
    auto [q, d] = random_quiver(rng, 5, 10);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_hash(q, d));
}
BENCHMARK(BM_canonical_hash);

} // namespace

BENCHMARK_MAIN();
