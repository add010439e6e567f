#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "editdiam/distance.hpp"
#include "editdiam/language.hpp"
#include "editdiam/parallel.hpp"

namespace editdiam {

struct DiameterReport {
  std::size_t n = 0;
  HalfDistance value;
  /// Lexicographically smallest maximizing pair, first <= second.
  Word witness_first;
  Word witness_second;
  /// All pairs evaluated or soundly pruned; otherwise value is a lower bound.
  bool exact = false;
  std::uint64_t pairs_evaluated = 0;
  std::uint64_t pairs_pruned = 0;
};

struct DiameterMode {
  enum class Kind { exact, sample };
  Kind kind = Kind::exact;
  bool prune = true;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;

  static DiameterMode exhaustive(bool prune = true) { return DiameterMode{Kind::exact, prune, 0, 0}; }
  static DiameterMode sample(std::uint64_t budget, std::uint64_t seed) {
    return DiameterMode{Kind::sample, false, budget, seed};
  }
};

/// Rows of the pair triangle handled between threshold refreshes. Fixed so
/// that pruning decisions, and therefore the reported counts, do not depend
/// on the thread count.
inline constexpr std::size_t kDiameterRowBlock = 16;

/// Maximum pairwise d_E over a set of words in canonical order.
///
/// Exact mode computes d(w, anchor) for the first word, then skips pair
/// (u, v) whenever an upper bound on d(u, v) is <= the best value found in
/// earlier row blocks. The bounds are the triangle bound through the anchor
/// and the shared-letter-count bound on the LCS. Sample mode evaluates
/// `budget` seeded uniform pairs and reports a lower bound.
DiameterReport diameter(std::span<const Word> words, const DiameterMode& mode, const ParallelOptions& par = {});

inline DiameterReport diameter(const LanguageSet& set, const DiameterMode& mode, const ParallelOptions& par = {}) {
  auto r = diameter(std::span<const Word>(set.words), mode, par);
  r.n = set.n;
  return r;
}

/// Sampled diameter over words drawn from a FactorSampler; a certified lower
/// bound on diam_E(W_n).
DiameterReport sampled_diameter(const FactorSampler& sampler, std::uint64_t budget, std::uint64_t seed,
                                const ParallelOptions& par = {});

}  // namespace editdiam
