#include <benchmark/benchmark.h>

#include "knotlift/invariants.hpp"
#include "knotlift/lifting.hpp"
#include "knotlift/moves.hpp"
#include "knotlift/numbering.hpp"
#include "knotlift/random.hpp"

using namespace knotlift;

namespace {

PlanarDiagram sample(int crossings) {
  RandomDiagramOptions o;
  o.max_crossings = crossings;
  o.max_double_lines = crossings;
  return generate_random_diagram(static_cast<std::uint64_t>(crossings) * 7919, o);
}

void BM_Traverse(benchmark::State& st) {
  const PlanarDiagram d = sample(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(traverse(d));
}
BENCHMARK(BM_Traverse)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveIntegral(benchmark::State& st) {
  const ConstraintSystem cs = build_constraints(traverse(sample(static_cast<int>(st.range(0)))), false);
  for (auto _ : st) benchmark::DoNotOptimize(solve(cs, 0));
}
BENCHMARK(BM_SolveIntegral)->Arg(4)->Arg(8)->Arg(16);

void BM_Cover0(benchmark::State& st) {
  const PlanarDiagram d = sample(8);
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cover0(d, m));
}
BENCHMARK(BM_Cover0)->DenseRange(2, 5);

void BM_CoveringNumbering(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const CoveringDiagram c = cover0(sample(8), m);
  for (auto _ : st) benchmark::DoNotOptimize(covering_numbering(c, m));
}
BENCHMARK(BM_CoveringNumbering)->DenseRange(2, 5);

void BM_EnumerateSites(benchmark::State& st) {
  const PlanarDiagram d = sample(8);
  for (auto _ : st)
    for (MoveKind k : kAllMoveKinds) benchmark::DoNotOptimize(enumerate_sites(d, k));
}
BENCHMARK(BM_EnumerateSites);

void BM_InvariantReport(benchmark::State& st) {
  const PlanarDiagram d = lift0(sample(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(invariant_report(d));
}
BENCHMARK(BM_InvariantReport)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
