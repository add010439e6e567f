#include <benchmark/benchmark.h>

#include <random>

#include "editdiam/lcs.hpp"
#include "editdiam/parallel.hpp"

namespace {

using editdiam::Letter;
using editdiam::Word;

Word random_word(std::mt19937_64& rng, std::size_t len) {
  Word w(len);
  for (auto& c : w) c = static_cast<Letter>(rng() & 1);
  return w;
}

// y differs from x by `edits` flipped letters; the band engine pays O(n D).
std::pair<Word, Word> pair_with_edits(std::size_t len, std::size_t edits) {
  std::mt19937_64 rng(42);
  Word x = random_word(rng, len);
  Word y = x;
  for (std::size_t e = 0; e < edits; ++e) y[rng() % len] ^= 1;
  return {x, y};
}

void BM_Lcs(benchmark::State& state, editdiam::LcsEngine engine) {
  const auto [x, y] = pair_with_edits(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(editdiam::lcs_length(x, y, engine));
  state.SetComplexityN(state.range(0));
}

void args(benchmark::internal::Benchmark* b) {
  for (long n : {64, 256, 1024, 4096})
    for (long d : {1, 4, 8, 16, 32, 64}) b->Args({n, d});
}

}  // namespace

BENCHMARK_CAPTURE(BM_Lcs, dp, editdiam::LcsEngine::dp)->Apply(args);
BENCHMARK_CAPTURE(BM_Lcs, bitparallel, editdiam::LcsEngine::bitparallel)->Apply(args);
BENCHMARK_CAPTURE(BM_Lcs, band, editdiam::LcsEngine::band)->Apply(args);

BENCHMARK_MAIN();
