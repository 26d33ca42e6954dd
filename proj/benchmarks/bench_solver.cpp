#include <benchmark/benchmark.h>

#include "pcst/generators.hpp"
#include "pcst/oracle.hpp"
#include "pcst/quota.hpp"
#include "pcst/solver.hpp"

namespace {

pcst::SolveOptions quiet() {
  pcst::SolveOptions o;
  o.phase.audit_every_event = false;
  return o;
}

pcst::Instance random_instance(unsigned n, std::uint64_t seed, unsigned max_profit = 0) {
  pcst::RandomSpec s;
  s.n = n;
  s.edge_prob = pcst::Rational(3, n);
  s.seed = seed;
  s.max_profit = max_profit;
  return pcst::gen_random(s);
}

void BM_Counterexample(benchmark::State& state) {
  pcst::Instance g = pcst::gen_counterexample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pcst::solve(g, quiet()).objective);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Counterexample)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CounterexampleAudited(benchmark::State& state) {
  pcst::Instance g = pcst::gen_counterexample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pcst::solve(g).objective);
}
BENCHMARK(BM_CounterexampleAudited)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  pcst::Instance g = pcst::gen_counterexample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pcst::solve_monotone_baseline(g).dual_total);
}
BENCHMARK(BM_Baseline)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RandomSparse(benchmark::State& state) {
  pcst::Instance g = random_instance(static_cast<unsigned>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(pcst::solve(g, quiet()).objective);
}
BENCHMARK(BM_RandomSparse)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Lmp(benchmark::State& state) {
  pcst::Instance g = random_instance(static_cast<unsigned>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(pcst::solve_lmp(g, quiet()).original_objective);
}
BENCHMARK(BM_Lmp)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Quota(benchmark::State& state) {
  pcst::Instance g = random_instance(static_cast<unsigned>(state.range(0)), 13, 5);
  pcst::Rational total = 0;
  for (const auto& p : g.profits()) total += p;
  for (auto _ : state) benchmark::DoNotOptimize(pcst::solve_quota(g, total / 4).cost);
}
BENCHMARK(BM_Quota)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  pcst::Instance g = random_instance(static_cast<unsigned>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(pcst::brute_pcst(g).value);
}
BENCHMARK(BM_Oracle)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
