#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "editdiam/alphabet.hpp"
#include "editdiam/incidence.hpp"

namespace editdiam {

/// A map from letters to nonempty words, extended to words by concatenation.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const;
  std::span<const Word> images() const noexcept { return images_; }

  /// Present iff every image has the same length.
  std::optional<std::size_t> uniform_length() const noexcept { return uniform_length_; }
  std::size_t min_image_length() const noexcept { return min_len_; }
  std::size_t max_image_length() const noexcept { return max_len_; }

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
  std::optional<std::size_t> uniform_length_;
  std::size_t min_len_ = 0;
  std::size_t max_len_ = 0;
};

/// Concatenation of images; throws InputError on a letter outside the alphabet.
Word substitute(const Substitution& sub, WordView w);

/// Appends substitute(sub, w) to out.
void substitute_append(const Substitution& sub, WordView w, Word& out);

/// sigma^k(a). The length is computed from incidence-matrix powers first, and
/// a result longer than cap letters raises ResourceError before allocation.
Word iterate(const Substitution& sub, Letter a, unsigned k, std::size_t cap = kDefaultLetterCap);

/// sigma^k applied to a word, with the same cap semantics as iterate().
Word iterate_word(const Substitution& sub, WordView w, unsigned k, std::size_t cap = kDefaultLetterCap);

/// Len(sigma^k(a)) for every letter, saturating at IncidenceMatrix::kSaturated.
std::vector<std::uint64_t> iterate_lengths(const Substitution& sub, unsigned k);

/// (outer . inner)(a) = outer(inner(a)); both must share an alphabet.
Substitution compose(const Substitution& outer, const Substitution& inner);

/// sigma^p for p >= 1.
Substitution power(const Substitution& sub, unsigned p);

/// Entry (a,b) counts occurrences of b in sigma(a).
IncidenceMatrix incidence(const Substitution& sub);

/// G_sigma strongly connected with cycle-length gcd 1.
bool is_primitive(const Substitution& sub);

/// Minimal p with M^p entrywise positive; DomainError when sub is not primitive.
unsigned positivity_index(const Substitution& sub);

/// (|A|-1)^2 + 1.
std::size_t wielandt_bound(std::size_t alphabet_size) noexcept;

}  // namespace editdiam
