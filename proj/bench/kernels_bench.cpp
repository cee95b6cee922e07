// Serial reference kernels against their OpenMP counterparts.
//   ./kernels_bench --benchmark_filter=BruteForce
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "cycgr/autsearch.hpp"
#include "cycgr/cli.hpp"
#include "cycgr/closure.hpp"
#include "cycgr/constructions.hpp"

using namespace cycgr;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

ColoredGraph random_graph(std::size_t n, Color k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<Color> colors(pair_count(n));
  for (auto& c : colors) c = static_cast<Color>(pick(rng));
  return ColoredGraph(n, k, std::move(colors));
}

void BM_BruteForce(benchmark::State& state) {
  const auto g = random_graph(8, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group_bruteforce(g, mode(state)));
  label(state);
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForceSymmetric(benchmark::State& state) {
  // monochromatic K_8: every one of the 8! permutations survives
  const ColoredGraph k8(8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group_bruteforce(k8, mode(state)));
  label(state);
}
BENCHMARK(BM_BruteForceSymmetric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MembershipExhaustive(benchmark::State& state) {
  // (3,3) plus 4 fixed points: 2^18 colorings, none works with 2 colors
  const auto group = cyclic_group(CyclicSpec(3, {1, 1}, 4));
  MembershipOptions options;
  options.budget = std::size_t{1} << 20;
  options.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(gr_k_membership(group, 2, options));
  label(state);
}
BENCHMARK(BM_MembershipExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MembershipSearch(benchmark::State& state) {
  const auto group = cyclic_group(CyclicSpec(2, {2, 1, 1}, 0));
  MembershipOptions options;
  options.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(gr_k_membership(group, 3, options));
  label(state);
}
BENCHMARK(BM_MembershipSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerificationTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::verification_table(mode(state)));
  label(state);
}
BENCHMARK(BM_VerificationTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
