#include "editdiam/diameter.hpp"

#include <algorithm>
#include <random>

#include "editdiam/error.hpp"

namespace editdiam {
namespace {

struct Best {
  std::uint64_t doubled = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  bool set = false;

  // Larger value wins; equal values keep the lexicographically smaller pair.
  void offer(std::uint64_t d, std::size_t i, std::size_t j) {
    if (!set || d > doubled || (d == doubled && std::pair(i, j) < std::pair(first, second))) {
      doubled = d;
      first = i;
      second = j;
      set = true;
    }
  }
};

class LetterCounts {
 public:
  explicit LetterCounts(std::span<const Word> words) {
    Letter max_letter = 0;
    for (const Word& w : words)
      for (Letter c : w) max_letter = std::max(max_letter, c);
    sigma_ = static_cast<std::size_t>(max_letter) + 1;
    enabled_ = sigma_ <= 64;
    if (!enabled_) return;
    counts_.assign(words.size() * sigma_, 0);
    for (std::size_t i = 0; i < words.size(); ++i)
      for (Letter c : words[i]) ++counts_[i * sigma_ + c];
  }

  // max_c min(count_u(c), count_v(c)) is a lower bound on LCS(u, v).
  std::uint32_t shared(std::size_t i, std::size_t j) const {
    if (!enabled_) return 0;
    std::uint32_t best = 0;
    const std::uint32_t* a = counts_.data() + i * sigma_;
    const std::uint32_t* b = counts_.data() + j * sigma_;
    for (std::size_t c = 0; c < sigma_; ++c) best = std::max(best, std::min(a[c], b[c]));
    return best;
  }

 private:
  std::size_t sigma_ = 0;
  bool enabled_ = false;
  std::vector<std::uint32_t> counts_;
};

DiameterReport finish(std::span<const Word> words, const Best& best, bool exact, std::uint64_t evaluated,
                      std::uint64_t pruned) {
  DiameterReport r;
  r.n = words.front().size();
  r.value = HalfDistance(best.doubled);
  r.witness_first = words[best.first];
  r.witness_second = words[best.second];
  r.exact = exact;
  r.pairs_evaluated = evaluated;
  r.pairs_pruned = pruned;
  return r;
}

DiameterReport exact_diameter(std::span<const Word> words, bool prune, const ParallelOptions& par) {
  const std::size_t count = words.size();
  Best best;
  best.set = true;  // (0, 0) with value 0 covers the single-word case
  if (count == 1) return finish(words, best, true, 0, 0);

  const BitParallelLcs anchor(words[0]);
  std::vector<std::uint64_t> to_anchor(count, 0);
  for (std::size_t j = 1; j < count; ++j) {
    to_anchor[j] = words[0].size() + words[j].size() - 2 * anchor.lcs(words[j]);
    best.offer(to_anchor[j], 0, j);
  }
  std::uint64_t evaluated = count - 1;
  std::uint64_t pruned = 0;
  const LetterCounts letters(words);

  struct RowResult {
    Best best;
    std::uint64_t evaluated = 0;
    std::uint64_t pruned = 0;
  };
  std::vector<RowResult> rows(kDiameterRowBlock);
  for (std::size_t block = 1; block + 1 < count; block += kDiameterRowBlock) {
    const std::size_t rows_here = std::min(kDiameterRowBlock, count - 1 - block);
    const std::uint64_t threshold = best.doubled;
    parallel_for(rows_here, par, [&](std::size_t r) {
      const std::size_t i = block + r;
      RowResult res;
      const BitParallelLcs row(words[i]);
      for (std::size_t j = i + 1; j < count; ++j) {
        const std::uint64_t total = words[i].size() + words[j].size();
        if (prune) {
          const std::uint64_t tri = to_anchor[i] + to_anchor[j];
          const std::uint64_t cnt = total - 2 * std::uint64_t{letters.shared(i, j)};
          if (std::min(tri, cnt) <= threshold) {
            ++res.pruned;
            continue;
          }
        }
        ++res.evaluated;
        res.best.offer(total - 2 * row.lcs(words[j]), i, j);
      }
      rows[r] = res;
    });
    for (std::size_t r = 0; r < rows_here; ++r) {
      if (rows[r].best.set) best.offer(rows[r].best.doubled, rows[r].best.first, rows[r].best.second);
      evaluated += rows[r].evaluated;
      pruned += rows[r].pruned;
    }
  }
  return finish(words, best, true, evaluated, pruned);
}

DiameterReport sample_diameter(std::span<const Word> words, std::uint64_t budget, std::uint64_t seed,
                               const ParallelOptions& par) {
  const std::size_t count = words.size();
  Best best;
  best.set = true;
  if (count == 1 || budget == 0) return finish(words, best, false, 0, 0);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(budget);
  for (auto& p : pairs) {
    std::size_t i = uniform_below(rng, count);
    std::size_t j = uniform_below(rng, count - 1);
    if (j >= i) ++j;
    p = std::minmax(i, j);
  }
  std::vector<std::uint64_t> values(budget);
  parallel_for(budget, par, [&](std::size_t t) {
    values[t] = indel_distance(words[pairs[t].first], words[pairs[t].second]).doubled();
  });
  for (std::size_t t = 0; t < budget; ++t) best.offer(values[t], pairs[t].first, pairs[t].second);
  return finish(words, best, false, budget, 0);
}

}  // namespace

DiameterReport diameter(std::span<const Word> words, const DiameterMode& mode, const ParallelOptions& par) {
  if (words.empty()) throw InputError("diameter of an empty word set");
  if (mode.kind == DiameterMode::Kind::sample) return sample_diameter(words, mode.budget, mode.seed, par);
  return exact_diameter(words, mode.prune, par);
}

DiameterReport sampled_diameter(const FactorSampler& sampler, std::uint64_t budget, std::uint64_t seed,
                                const ParallelOptions& par) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Word, Word>> pairs;
  pairs.reserve(budget);
  for (std::uint64_t t = 0; t < budget; ++t) {
    Word u = sampler.draw(rng);
    Word v = sampler.draw(rng);
    if (v < u) std::swap(u, v);
    pairs.emplace_back(std::move(u), std::move(v));
  }
  std::vector<std::uint64_t> values(budget);
  parallel_for(budget, par,
               [&](std::size_t t) { values[t] = indel_distance(pairs[t].first, pairs[t].second).doubled(); });

  DiameterReport r;
  r.n = sampler.n();
  r.exact = false;
  r.pairs_evaluated = budget;
  std::size_t arg = budget;
  for (std::size_t t = 0; t < budget; ++t) {
    if (arg == budget || values[t] > values[arg] || (values[t] == values[arg] && pairs[t] < pairs[arg])) arg = t;
  }
  if (arg < budget) {
    r.value = HalfDistance(values[arg]);
    r.witness_first = pairs[arg].first;
    r.witness_second = pairs[arg].second;
  }
  return r;
}

}  // namespace editdiam
