#include "cyclocover/builtins.hpp"
#include "cyclocover/cover.hpp"
#include "cyclocover/random_objects.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace cyclocover;

namespace {

// Square matrix with small entries; rank deficient by roughly a tenth.
FieldMatrix random_field_matrix(Field f, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(f, rng, 5);
    for (std::size_t i = n - n / 10; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i - 1, j) + m(i - 2, j);
    return m;
}

Field field_arg(std::int64_t code) { return code == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(code)); }

void BM_rank(benchmark::State& state, Execution exec) {
    const auto m = random_field_matrix(field_arg(state.range(1)), static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, exec));
    state.SetComplexityN(state.range(0));
}

void BM_cover_reports(benchmark::State& state, Execution exec) {
    Rng rng(99);
    RandomComplexOptions opts;
    opts.max_cells = 5;
    std::vector<ChainComplexOverR> corpus;
    for (int i = 0; i < 8; ++i) corpus.push_back(random_complex(Field::rationals(), rng, opts));
    corpus.push_back(builtin_complex("trefoil"));
    std::vector<std::size_t> ds(static_cast<std::size_t>(state.range(0)));
    std::iota(ds.begin(), ds.end(), std::size_t{1});
    for (auto _ : state) {
        for (const auto& c : corpus) benchmark::DoNotOptimize(cover_reports(c, ds, Routes::both, exec));
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_rank, serial, Execution::serial)
    ->ArgsProduct({{16, 32, 64}, {0, 1000003}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank, parallel, Execution::parallel)
    ->ArgsProduct({{16, 32, 64}, {0, 1000003}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_cover_reports, serial, Execution::serial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_cover_reports, parallel, Execution::parallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
