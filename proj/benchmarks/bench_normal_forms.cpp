#include <random>

#include <benchmark/benchmark.h>

#include "tiedmon/diagram.hpp"
#include "tiedmon/presentation.hpp"
#include "tiedmon/ramified.hpp"
#include "tiedmon/tied_jones.hpp"

using namespace tiedmon;

namespace {

  Word random_word(std::mt19937& rng, int n, std::string const& letters, int len) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1);
    std::uniform_int_distribution<int> idx(1, n - 1);
    Word                               w;
    for (int p = 0; p < len; ++p) {
      int const i = idx(rng);
      switch (letters[pick(rng)]) {
        case 's': w.push_back(Token::s(i)); break;
        case 't': w.push_back(Token::t(i)); break;
        case 'e': w.push_back(Token::e(i)); break;
        default: w.push_back(Token::f(i)); break;
      }
    }
    return w;
  }

}  // namespace

static void BM_BrauerNormalForm(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  auto const   d = eval_word(random_word(rng, n, "st", 4 * n), diagram_assignment(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brauer_normal_form(d));
  }
}
BENCHMARK(BM_BrauerNormalForm)->RangeMultiplier(2)->Range(4, 64);

static void BM_TJNormalize(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  auto const   w = random_word(rng, n, "ef", 4 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tj_normalize(w, n));
  }
}
BENCHMARK(BM_TJNormalize)->RangeMultiplier(2)->Range(4, 32);

static void BM_TieSaturate(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  std::mt19937 rng(3);
  auto const   w = random_word(rng, n, "stef", 3 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tie_saturate(w, n));
  }
}
BENCHMARK(BM_TieSaturate)->RangeMultiplier(2)->Range(4, 32);

static void BM_FactorBalanced(benchmark::State& state) {
  auto const bbr = build_family(Family::bBr, 4);
  for (auto _ : state) {
    for (auto const& a : bbr.elements()) {
      benchmark::DoNotOptimize(factor_balanced(a));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bbr.size()));
}
BENCHMARK(BM_FactorBalanced)->Unit(benchmark::kMillisecond);
