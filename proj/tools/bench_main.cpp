// Parallel kernels vs their serial twins. The outputs are bitwise equal by
// construction; these benchmarks measure what the thread pool buys.

#include <benchmark/benchmark.h>

#include <vector>

#include "basn/batch.hpp"
#include "basn/core.hpp"
#include "basn/rng.hpp"
#include "basn/sampling.hpp"

namespace {

std::vector<double> make_grid(std::size_t n) {
  basn::Xoshiro256pp g(4711);
  std::vector<double> xs(n);
  for (auto& x : xs) x = 12.0 * g.next_double() - 6.0;
  return xs;
}

void bm_pdf_grid_serial(benchmark::State& state) {
  const auto xs = make_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(basn::batch::pdf_grid_serial(xs, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_pdf_grid_parallel(benchmark::State& state) {
  const auto xs = make_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(basn::batch::pdf_grid(xs, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_loglik_serial(benchmark::State& state) {
  const auto xs = make_grid(static_cast<std::size_t>(state.range(0)));
  const basn::LocScaleParams p{1.0, 0.1, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(basn::batch::loglik_sum_serial(xs, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_loglik_parallel(benchmark::State& state) {
  const auto xs = make_grid(static_cast<std::size_t>(state.range(0)));
  const basn::LocScaleParams p{1.0, 0.1, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(basn::batch::loglik_sum(xs, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_sample_serial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basn::sample_basn2(1.0, {n, 99}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_sample_parallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(basn::batch::sample_basn2_parallel(1.0, {n, 99}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_pdf_grid_serial)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(bm_pdf_grid_parallel)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(bm_loglik_serial)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(bm_loglik_parallel)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(bm_sample_serial)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 20);
BENCHMARK(bm_sample_parallel)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 20);

BENCHMARK_MAIN();
