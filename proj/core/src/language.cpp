#include "editdiam/language.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "editdiam/error.hpp"
#include "editdiam/int128.hpp"
#include "editdiam/parallel.hpp"

namespace editdiam {
namespace {

// Polynomial hashing modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 0x1d3a8f0c5be97ULL % kMod;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const UInt128 p = static_cast<UInt128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}

class RollingHash {
 public:
  explicit RollingHash(std::size_t window) {
    pow_ = 1;
    for (std::size_t i = 0; i < window; ++i) pow_ = mulmod(pow_, kBase);
  }

  void reset(WordView text) {
    prefix_.assign(text.size() + 1, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      std::uint64_t h = mulmod(prefix_[i], kBase) + text[i] + 1;
      if (h >= kMod) h -= kMod;
      prefix_[i + 1] = h;
    }
  }

  // Hash of text[i, i + window).
  std::uint64_t window(std::size_t i, std::size_t window_len) const {
    const std::uint64_t sub = mulmod(prefix_[i], pow_);
    const std::uint64_t top = prefix_[i + window_len];
    return top >= sub ? top - sub : top + kMod - sub;
  }

 private:
  std::uint64_t pow_ = 1;
  std::vector<std::uint64_t> prefix_;
};

// Deduplicated set of words of one fixed length, stored contiguously.
class FixedLengthStore {
 public:
  FixedLengthStore(std::size_t n, std::size_t letter_cap) : n_(n), cap_(letter_cap) {}

  std::size_t size() const noexcept { return n_ == 0 ? 0 : data_.size() / n_; }
  WordView at(std::size_t idx) const { return WordView(data_.data() + idx * n_, n_); }

  bool insert(const Letter* word, std::uint64_t hash) {
    auto [lo, hi] = index_.equal_range(hash);
    for (auto it = lo; it != hi; ++it)
      if (std::equal(word, word + n_, data_.data() + it->second * n_)) return false;
    if (data_.size() + n_ > cap_)
      throw ResourceError("factor set of length " + std::to_string(n_) + " exceeds cap of " + std::to_string(cap_) +
                          " letters");
    index_.emplace(hash, static_cast<std::uint32_t>(size()));
    data_.insert(data_.end(), word, word + n_);
    return true;
  }

  std::vector<Word> sorted_words() const {
    std::vector<Word> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      auto w = at(i);
      out.emplace_back(w.begin(), w.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::vector<Letter> data_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
};

// Generalized suffix automaton; counts distinct nonempty factors of a set
// of words.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::size_t alphabet) : sigma_(alphabet) { add_state(0); }

  void add_word(WordView w) {
    int last = 0;
    for (Letter c : w) last = extend(last, c);
  }

  std::size_t distinct_factors() const {
    std::size_t total = 0;
    for (std::size_t v = 1; v < len_.size(); ++v) total += static_cast<std::size_t>(len_[v] - len_[link_[v]]);
    return total;
  }

 private:
  int add_state(int len) {
    len_.push_back(len);
    link_.push_back(-1);
    next_.resize(next_.size() + sigma_, -1);
    return static_cast<int>(len_.size()) - 1;
  }

  int& go(int state, Letter c) { return next_[static_cast<std::size_t>(state) * sigma_ + c]; }

  int clone_of(int p, int q, Letter c) {
    const int clone = add_state(len_[p] + 1);
    std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q) * sigma_, sigma_,
                next_.begin() + static_cast<std::ptrdiff_t>(clone) * sigma_);
    link_[clone] = link_[q];
    while (p != -1 && go(p, c) == q) {
      go(p, c) = clone;
      p = link_[p];
    }
    link_[q] = clone;
    return clone;
  }

  int extend(int last, Letter c) {
    if (int q = go(last, c); q != -1) {
      if (len_[q] == len_[last] + 1) return q;
      return clone_of(last, q, c);
    }
    const int cur = add_state(len_[last] + 1);
    int p = last;
    while (p != -1 && go(p, c) == -1) {
      go(p, c) = cur;
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
    } else {
      const int q = go(p, c);
      link_[cur] = len_[p] + 1 == len_[q] ? q : clone_of(p, q, c);
    }
    return cur;
  }

  std::size_t sigma_;
  std::vector<int> len_;
  std::vector<int> link_;
  std::vector<int> next_;
};

}  // namespace

bool LanguageSet::contains(const Word& w) const { return std::binary_search(words.begin(), words.end(), w); }

std::vector<Word> factor_closure(const Substitution& sub, std::size_t n, std::size_t* iterations,
                                 std::size_t letter_cap) {
  if (n == 0) throw InputError("factor_closure: n must be >= 1");
  std::unordered_set<Word, WordHash> closure;
  for (Letter a = 0; a < sub.alphabet_size(); ++a) closure.insert(Word{a});
  std::size_t letters = closure.size();
  std::size_t rounds = 0;
  for (;;) {
    ++rounds;
    std::vector<Word> fresh;
    for (const Word& u : closure) {
      const Word z = substitute(sub, u);
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t len = 1; len <= n && i + len <= z.size(); ++len) {
          Word f(z.begin() + static_cast<std::ptrdiff_t>(i), z.begin() + static_cast<std::ptrdiff_t>(i + len));
          if (!closure.count(f)) fresh.push_back(std::move(f));
        }
    }
    std::size_t added = 0;
    for (auto& f : fresh) {
      const std::size_t len = f.size();
      if (closure.insert(std::move(f)).second) {
        ++added;
        letters += len;
      }
    }
    if (letters > letter_cap) throw ResourceError("factor closure exceeds letter cap");
    if (added == 0) break;
  }
  if (iterations) *iterations = rounds;
  std::vector<Word> out(closure.begin(), closure.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

LanguageSet language(const Substitution& sub, std::size_t n, const LanguageOptions& opts) {
  if (n == 0) throw InputError("language: n must be >= 1");
  FixedLengthStore store(n, opts.letter_cap);
  RollingHash hasher(n);
  std::set<Word> shorts;

  std::vector<Word> cur_short;
  std::vector<std::size_t> cur_full;
  for (Letter a = 0; a < sub.alphabet_size(); ++a) {
    cur_short.push_back(Word{a});
    if (n > 1) shorts.insert(Word{a});
  }

  LanguageSet out;
  out.n = n;
  Word z;
  Word u;
  auto expand = [&](WordView src, std::vector<Word>& next_short, std::vector<std::size_t>& next_full) {
    z.clear();
    substitute_append(sub, src, z);
    if (z.size() < n) {
      if (shorts.insert(z).second) next_short.push_back(z);
      return;
    }
    hasher.reset(z);
    for (std::size_t i = 0; i + n <= z.size(); ++i)
      if (store.insert(z.data() + i, hasher.window(i, n))) next_full.push_back(store.size() - 1);
  };

  while (!cur_short.empty() || !cur_full.empty()) {
    ++out.iterations;
    std::vector<Word> next_short;
    std::vector<std::size_t> next_full;
    for (const Word& s : cur_short) expand(s, next_short, next_full);
    for (std::size_t idx : cur_full) {
      auto w = store.at(idx);
      u.assign(w.begin(), w.end());
      expand(u, next_short, next_full);
    }
    cur_short.swap(next_short);
    cur_full.swap(next_full);
  }

  out.words = store.sorted_words();
  if (opts.count_closure) {
    SuffixAutomaton sam(sub.alphabet_size());
    for (Letter a = 0; a < sub.alphabet_size(); ++a) sam.add_word(Word{a});
    for (const Word& s : shorts) sam.add_word(s);
    for (const Word& w : out.words) sam.add_word(w);
    out.closure_size = sam.distinct_factors();
  }
  return out;
}

LanguageSet language_oracle_scan(const Substitution& sub, std::size_t n, unsigned k_max, std::size_t letter_cap) {
  if (n == 0) throw InputError("language_oracle_scan: n must be >= 1");
  if (k_max == 0) throw InputError("language_oracle_scan: k_max must be >= 1");
  const auto lengths = iterate_lengths(sub, k_max);
  if (*std::min_element(lengths.begin(), lengths.end()) < 4 * n)
    throw InputError("language_oracle_scan: k_max too small, need Len(sigma^k_max(a)) >= 4n for every a");
  std::unordered_set<Word, WordHash> seen;
  for (Letter a = 0; a < sub.alphabet_size(); ++a) {
    Word it{a};
    for (unsigned k = 1; k <= k_max; ++k) {
      if (it.size() > letter_cap / std::max<std::size_t>(sub.max_image_length(), 1))
        throw ResourceError("oracle scan iterate exceeds letter cap");
      it = substitute(sub, it);
      for (std::size_t i = 0; i + n <= it.size(); ++i)
        seen.emplace(it.begin() + static_cast<std::ptrdiff_t>(i), it.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
  }
  LanguageSet out;
  out.n = n;
  out.words.assign(seen.begin(), seen.end());
  std::sort(out.words.begin(), out.words.end());
  out.iterations = k_max;
  return out;
}

std::vector<std::size_t> complexity_profile(const Substitution& sub, std::size_t n_max) {
  if (n_max == 0) throw InputError("complexity_profile: n_max must be >= 1");
  std::vector<std::size_t> out;
  out.reserve(n_max);
  LanguageOptions opts;
  opts.count_closure = false;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(language(sub, n, opts).size());
  return out;
}

FactorSampler::FactorSampler(const Substitution& sub, std::size_t n, std::size_t materialize_letters)
    : sub_(sub), n_(n) {
  if (n == 0) throw InputError("FactorSampler: n must be >= 1");
  LanguageOptions opts;
  opts.count_closure = false;
  opts.letter_cap = materialize_letters;
  try {
    full_ = language(sub, n, opts);
    if (full_.words.empty()) throw DomainError("W_n is empty for n = " + std::to_string(n));
    return;
  } catch (const ResourceError&) {
    full_ = LanguageSet{};
  }
  if (!is_primitive(sub))
    throw DomainError("implicit sampling of W_n requires a primitive substitution (n = " + std::to_string(n) + ")");
  constexpr std::size_t kBaseLimit = 64;
  for (unsigned j = 1; j <= 64; ++j) {
    const auto lengths = iterate_lengths(sub, j);
    const std::uint64_t min_len = *std::min_element(lengths.begin(), lengths.end());
    const std::size_t m = static_cast<std::size_t>((n - 1 + min_len - 1) / min_len) + 1;
    if (m <= kBaseLimit) {
      depth_ = j;
      // m <= kBaseLimit keeps W_m small whatever the budget for W_n was.
      LanguageOptions base_opts;
      base_opts.count_closure = false;
      base_ = language(sub, m, base_opts);
      return;
    }
  }
  throw DomainError("FactorSampler: substitution does not grow fast enough for implicit sampling");
}

Word FactorSampler::draw(std::mt19937_64& rng) const {
  if (uniform()) return full_.words[uniform_below(rng, full_.words.size())];
  const Word& v = base_.words[uniform_below(rng, base_.words.size())];
  const Word z = iterate_word(sub_, v, depth_);
  const std::size_t off = uniform_below(rng, z.size() - n_ + 1);
  return Word(z.begin() + static_cast<std::ptrdiff_t>(off), z.begin() + static_cast<std::ptrdiff_t>(off + n_));
}

}  // namespace editdiam
