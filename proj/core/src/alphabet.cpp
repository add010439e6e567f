#include "editdiam/alphabet.hpp"

#include <cctype>

#include "editdiam/error.hpp"

namespace editdiam {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InputError("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.empty()) throw InputError("alphabet symbols must be nonempty");
    if (!index_.emplace(s, static_cast<Letter>(i)).second)
      throw InputError("duplicate alphabet symbol '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

const std::string& Alphabet::symbol(Letter id) const {
  if (id >= symbols_.size()) throw InputError("letter id " + std::to_string(id) + " out of range");
  return symbols_[id];
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view token) const {
  if (auto id = find(token)) return *id;
  throw InputError("unknown letter '" + std::string(token) + "'");
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  auto tokens = split_tokens(text);
  Word w;
  if (tokens.size() == 1 && single_char_ && tokens[0].size() > 1) {
    w.reserve(tokens[0].size());
    for (char c : tokens[0]) w.push_back(at(std::string_view(&c, 1)));
    return w;
  }
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(at(t));
  return w;
}

std::string Alphabet::format(WordView word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char_ && i > 0) out.push_back(' ');
    out += symbol(word[i]);
  }
  return out;
}

bool Alphabet::contains_all(WordView word) const noexcept {
  for (Letter c : word)
    if (c >= symbols_.size()) return false;
  return true;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter ids
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter c : w) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

}  // namespace editdiam
