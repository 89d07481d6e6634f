#include <benchmark/benchmark.h>

#include <map>
#include <numeric>
#include <random>

#include "tworep/intw.hpp"

using namespace tworep;

namespace {

CycloNumber mixed(int order, std::mt19937_64& rng) {
  CycloNumber x(static_cast<long>(rng() % 7) - 3);
  for (int k = 1; k < order; ++k)
    if (rng() % 2) x += CycloNumber::zeta(order, k) * CycloNumber(static_cast<long>(rng() % 5) - 2);
  return x;
}

OneMorphism gauged(std::size_t src, std::size_t tgt, std::mt19937_64& rng) {
  RankMatrix r(tgt, src);
  for (std::size_t i = 0; i < tgt; ++i)
    for (std::size_t j = 0; j < src; ++j) r(i, j) = 1 + static_cast<int>(rng() % 2);
  std::map<std::pair<std::size_t, Point>, CycloMatrix> table;
  for (const auto& a : probe_box(src, 3)) {
    if (std::accumulate(a.begin(), a.end(), 0) < 2) continue;
    for (std::size_t i = 0; i < tgt; ++i) {
      const int d = r.apply_row(i, a);
      if (d > 1 && rng() % 2) table[{i, a}] = CycloMatrix::scalar(d, CycloNumber::zeta(12, static_cast<long>(rng() % 12)));
    }
  }
  return OneMorphism(r, table_gauge(r, table));
}

}  // namespace

static void BM_CycloMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int order = static_cast<int>(state.range(0));
  auto a = mixed(order, rng), b = mixed(order, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(4)->Arg(12)->Arg(60);

static void BM_CycloInverse(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int order = static_cast<int>(state.range(0));
  auto a = mixed(order, rng);
  while (a.is_zero()) a = mixed(order, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycloInverse)->Arg(4)->Arg(12)->Arg(60);

// composite gauges are lazy; evaluate them on the probe box
static void BM_Compose1(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = gauged(n, n, rng), g = gauged(n, n, rng);
  for (auto _ : state) {
    auto h = compose1(g, f), k = compose1(g, f);
    benchmark::DoNotOptimize(equal_on_box(h, k, 2));
  }
}
BENCHMARK(BM_Compose1)->Arg(1)->Arg(2)->Arg(3);

static void BM_Hcompose2(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = gauged(n, n, rng), g = gauged(n, n, rng);
  auto a = TwoMorphism::identity(f), b = TwoMorphism::identity(g);
  for (auto _ : state) benchmark::DoNotOptimize(hcompose2(b, a).blocks().size());
}
BENCHMARK(BM_Hcompose2)->Arg(1)->Arg(2)->Arg(3);

static void BM_SolveCoboundary(benchmark::State& state) {
  auto g = state.range(0) == 0 ? FinGroup::symmetric(3) : FinGroup::dihedral(4);
  auto m = FinModule::trivial(g, {4});
  std::mt19937_64 rng(5);
  auto w = coboundary(Cochain::random_normalized(g, m, 2, rng));
  for (auto _ : state) benchmark::DoNotOptimize(solve_coboundary_equation(w).has_value());
}
BENCHMARK(BM_SolveCoboundary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Pi0Rep(benchmark::State& state) {
  auto z2 = FinGroup::cyclic(2);
  auto tg = SpecialTwoGroup::split(z2, FinModule::trivial(z2, {2}));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pi0_rep(*tg, n, 4).size());
}
BENCHMARK(BM_Pi0Rep)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Compose1Intertwiners(benchmark::State& state) {
  auto g = state.range(0) == 0 ? FinGroup::cyclic(2) : FinGroup::symmetric(3);
  auto tg = SpecialTwoGroup::discrete(g);
  auto reps = enumerate_perm_reps(*g, 2);
  auto a = std::make_shared<const RepQuadruple>(finset_rep(*tg, reps.back(), 2));
  auto b = std::make_shared<const RepQuadruple>(finset_rep(*tg, reps.front(), 2));
  auto f = finset_map(a, b, {0, 0});
  auto h = finset_map(b, b, {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(compose_1intertwiners(h, f).rank().rows());
}
BENCHMARK(BM_Compose1Intertwiners)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
