#include <benchmark/benchmark.h>

#include "permlab/closure.hpp"
#include "permlab/embedding.hpp"
#include "permlab/permutation.hpp"
#include "permlab/replay.hpp"

using namespace permlab;

namespace {

// Antichain on three elements with lestar total: the largest T(2,3) universe.
DoublyOrderedSet dense3() {
  OrderSpec s;
  s.elements = {"a", "b", "c"};
  for (const auto& x : s.elements) {
    s.le.insert({x, x});
    for (const auto& y : s.elements) s.lestar.insert({x, y});
  }
  return validate_order(s);
}

DoublyOrderedSet chain3() {
  OrderSpec s;
  s.elements = {"a", "b", "c"};
  for (const auto& x : s.elements)
    for (const auto& y : s.elements)
      if (x <= y) {
        s.le.insert({x, y});
        s.lestar.insert({x, y});
      }
  return validate_order(s);
}

void BM_BuildUniverse(benchmark::State& state) {
  const auto d = dense3();
  for (auto _ : state) benchmark::DoNotOptimize(build_universe(d, state.range(0), 3));
}
BENCHMARK(BM_BuildUniverse)->Arg(1)->Arg(2)->Arg(3);

void BM_ClosureSingletons(benchmark::State& state) {
  const auto u = build_universe(state.range(0) ? dense3() : chain3(), 2, 3);
  for (auto _ : state)
    for (AtomId a = 0; a < u->size(); ++a) benchmark::DoNotOptimize(closure(*u, AtomSet{a}));
  state.SetItemsProcessed(state.iterations() * u->size());
}
BENCHMARK(BM_ClosureSingletons)->Arg(0)->Arg(1);

void BM_Mover(benchmark::State& state) {
  const auto u = build_universe(dense3(), 2, 3);
  const AtomSet support{0};
  const auto cl = closure(*u, support);
  std::vector<AtomId> targets;
  for (AtomId a = 0; a < u->size(); ++a)
    if (!cl.contains(a)) targets.push_back(a);
  for (auto _ : state)
    for (AtomId c : targets) benchmark::DoNotOptimize(mover(*u, support, c));
  state.SetItemsProcessed(state.iterations() * targets.size());
}
BENCHMARK(BM_Mover);

void BM_FixingGeneratorOrbits(benchmark::State& state) {
  const auto u = build_universe(dense3(), 2, 3);
  for (auto _ : state) {
    const auto gens = fixing_generators(*u, AtomSet{0});
    benchmark::DoNotOptimize(orbits(*u, gens));
  }
}
BENCHMARK(BM_FixingGeneratorOrbits);

void BM_Report(benchmark::State& state) {
  const auto u = build_universe(state.range(0) ? dense3() : chain3(), 2, 3);
  for (auto _ : state) {
    const auto report = embedding_report(u, {});
    benchmark::DoNotOptimize(check_report(report).ok());
  }
}
BENCHMARK(BM_Report)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
