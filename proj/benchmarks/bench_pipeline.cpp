#include <fnf_cli/commands.hpp>
#include <tfnf/fnf.hpp>
#include <tfnf/recovery.hpp>
#include <tfnf/reduction.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

tfnf::OffsetSet make_offsets(tfnf::Index n, fnf_cli::OffsetPolicy policy)
{
  std::mt19937_64 rng(20240611);
  return fnf_cli::generate_offsets(n, policy, rng);
}

void reduce_only(benchmark::State& state)
{
  const auto offsets = make_offsets(state.range(0), fnf_cli::OffsetPolicy::UniformK);
  for (auto _ : state)
  {
    auto trace = tfnf::reduce(offsets);
    benchmark::DoNotOptimize(trace);
  }
  state.SetComplexityN(state.range(0));
}

void recover_only(benchmark::State& state)
{
  const auto trace = tfnf::reduce(make_offsets(state.range(0), fnf_cli::OffsetPolicy::UniformK));
  for (auto _ : state)
  {
    auto cis = tfnf::recover_cis(trace);
    benchmark::DoNotOptimize(cis);
  }
  state.SetComplexityN(state.range(0));
}

void full_pipeline(benchmark::State& state, fnf_cli::OffsetPolicy policy)
{
  const auto row = fnf_cli::unit_row(make_offsets(state.range(0), policy));
  for (auto _ : state)
  {
    auto result = tfnf::compute_fnf(row);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(reduce_only)->RangeMultiplier(10)->Range(1000, 10'000'000)->Complexity();
BENCHMARK(recover_only)->RangeMultiplier(10)->Range(1000, 10'000'000)->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(full_pipeline, uniform_k, fnf_cli::OffsetPolicy::UniformK)
    ->RangeMultiplier(10)->Range(1000, 10'000'000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(full_pipeline, paper_like, fnf_cli::OffsetPolicy::PaperLike)
    ->RangeMultiplier(10)->Range(1000, 10'000'000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
