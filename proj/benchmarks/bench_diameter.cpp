#include <benchmark/benchmark.h>

#include "editdiam/alphabet.hpp"
#include "editdiam/diameter.hpp"
#include "editdiam/language.hpp"
#include "editdiam/substitution.hpp"

namespace {

editdiam::Substitution thue_morse() {
  const editdiam::Alphabet ab({"0", "1"});
  return editdiam::Substitution(ab, {ab.parse_word("01"), ab.parse_word("10")});
}

void BM_Language(benchmark::State& state) {
  const auto mu = thue_morse();
  for (auto _ : state) benchmark::DoNotOptimize(editdiam::language(mu, static_cast<std::size_t>(state.range(0))).size());
}

void BM_ExactDiameter(benchmark::State& state) {
  const auto set = editdiam::language(thue_morse(), static_cast<std::size_t>(state.range(0)));
  const auto mode = editdiam::DiameterMode::exhaustive(state.range(1) != 0);
  editdiam::ParallelOptions par;
  par.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(editdiam::diameter(set, mode, par).value);
  state.counters["words"] = static_cast<double>(set.size());
}

void BM_SampledDiameter(benchmark::State& state) {
  const editdiam::FactorSampler sampler(thue_morse(), static_cast<std::size_t>(state.range(0)));
  editdiam::ParallelOptions par;
  par.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(editdiam::sampled_diameter(sampler, 64, 7, par).value);
}

}  // namespace

BENCHMARK(BM_Language)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_ExactDiameter)->Args({64, 0})->Args({64, 1})->Args({256, 0})->Args({256, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledDiameter)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
