#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace editdiam {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Default cap on the number of letters a single materialized word may hold.
inline constexpr std::size_t kDefaultLetterCap = std::size_t{1} << 28;

/// Ordered set of distinct, nonempty string tokens. Letter ids are the
/// positions in that order and never change for the lifetime of the object.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  /// {"0", "1"}
  static Alphabet binary();

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol(Letter id) const;
  std::optional<Letter> find(std::string_view token) const;
  Letter at(std::string_view token) const;

  /// True when every token is one character, which enables compact words.
  bool single_char() const noexcept { return single_char_; }

  /// Parses whitespace-separated tokens; a whitespace-free string is read one
  /// character per token when the alphabet is single-char.
  Word parse_word(std::string_view text) const;

  /// Joins tokens, with no separator for single-char alphabets.
  std::string format(WordView word) const;

  bool contains_all(WordView word) const noexcept;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, Letter, std::less<>> index_;
  bool single_char_ = true;
};

std::vector<std::string> split_tokens(std::string_view text);

/// Word hashing for unordered containers keyed by letter sequences.
struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace editdiam
