#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "editdiam/alphabet.hpp"
#include "editdiam/substitution.hpp"

namespace editdiam {

/// The factor set W_n(sigma), sorted in canonical (lexicographic) order.
struct LanguageSet {
  std::size_t n = 0;
  std::vector<Word> words;
  /// Fixpoint rounds executed, the last of which produced nothing new.
  std::size_t iterations = 0;
  /// Number of distinct words of length <= n in the factor closure; 0 when
  /// not requested.
  std::size_t closure_size = 0;

  std::size_t size() const noexcept { return words.size(); }
  bool contains(const Word& w) const;
};

struct LanguageOptions {
  std::size_t letter_cap = kDefaultLetterCap;
  bool count_closure = true;
};

/// Least fixpoint of S -> S u {factors of length <= n of sigma(u) : u in S}
/// seeded with the single letters. Returned sorted by (length, lex). This is
/// the literal construction and is meant for small n.
std::vector<Word> factor_closure(const Substitution& sub, std::size_t n, std::size_t* iterations = nullptr,
                                 std::size_t letter_cap = kDefaultLetterCap);

/// Length-n factors of sigma(u) over u in factor_closure(sub, n). Computed by
/// a worklist over the maximal closure elements (length-n windows and short
/// iterates) with rolling-hash deduplication.
LanguageSet language(const Substitution& sub, std::size_t n, const LanguageOptions& opts = {});

/// All length-n factors of sigma^k(a) for every letter a and 1 <= k <= k_max,
/// by sliding-window scan. A lower bound for language(); independent of it.
LanguageSet language_oracle_scan(const Substitution& sub, std::size_t n, unsigned k_max,
                                 std::size_t letter_cap = kDefaultLetterCap);

/// |W_n| for n = 1..n_max.
std::vector<std::size_t> complexity_profile(const Substitution& sub, std::size_t n_max);

/// Draws members of W_n. When W_n fits in the materialization budget the draw
/// is uniform over W_n; otherwise (primitive substitutions only) a word v is
/// drawn uniformly from a small W_m and a uniform window of sigma^j(v) is
/// returned. Every window of that form belongs to W_n and every member of
/// W_n arises this way.
class FactorSampler {
 public:
  FactorSampler(const Substitution& sub, std::size_t n, std::size_t materialize_letters = std::size_t{1} << 24);

  Word draw(std::mt19937_64& rng) const;
  bool uniform() const noexcept { return !full_.words.empty(); }
  std::size_t n() const noexcept { return n_; }

 private:
  Substitution sub_;
  std::size_t n_;
  LanguageSet full_;
  LanguageSet base_;
  unsigned depth_ = 0;
};

}  // namespace editdiam
