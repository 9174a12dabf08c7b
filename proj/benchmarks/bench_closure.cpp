#include <benchmark/benchmark.h>

#include "tiedmon/diagram.hpp"
#include "tiedmon/ramified.hpp"

using namespace tiedmon;

static void BM_BrauerClosure(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  std::vector<Labelled<Diagram>> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back({"s" + std::to_string(i), make_L(n, i)});
    gens.push_back({"t" + std::to_string(i), make_H(n, i)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(Diagram::identity(n), gens).size());
  }
}
BENCHMARK(BM_BrauerClosure)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_FamilyClosure(benchmark::State& state) {
  auto const f = static_cast<Family>(state.range(0));
  int const  n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_family(f, n).size());
  }
  state.SetLabel(family_name(f));
}
BENCHMARK(BM_FamilyClosure)
    ->Args({static_cast<int>(Family::RBr), 4})
    ->Args({static_cast<int>(Family::bBr), 4})
    ->Args({static_cast<int>(Family::tJimage), 6})
    ->Unit(benchmark::kMillisecond);

static void BM_DiagramProduct(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  Diagram   a = Diagram::identity(n);
  Diagram   b = Diagram::identity(n);
  for (int i = 1; i < n; ++i) {
    a = a * (i % 2 ? make_H(n, i) : make_L(n, i));
    b = b * (i % 3 ? make_L(n, i) : make_E(n, i));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_DiagramProduct)->RangeMultiplier(2)->Range(4, 64);

static void BM_RamifiedProduct(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  Ramified  a = Ramified::identity(n);
  for (int i = 1; i < n; ++i) {
    a = a * (i % 2 ? make_Ftilde(n, i) : make_Ltilde(n, i));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * a);
  }
}
BENCHMARK(BM_RamifiedProduct)->RangeMultiplier(2)->Range(4, 64);
