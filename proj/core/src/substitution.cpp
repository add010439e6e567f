#include "editdiam/substitution.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "editdiam/error.hpp"

namespace editdiam {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw InputError("substitution needs one image per letter (got " + std::to_string(images_.size()) +
                     " images for " + std::to_string(alphabet_.size()) + " letters)");
  min_len_ = images_.front().size();
  max_len_ = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    const Word& img = images_[a];
    if (img.empty()) throw InputError("image of '" + alphabet_.symbol(static_cast<Letter>(a)) + "' is empty");
    if (!alphabet_.contains_all(img)) throw InputError("image contains a letter outside the alphabet");
    min_len_ = std::min(min_len_, img.size());
    max_len_ = std::max(max_len_, img.size());
  }
  if (min_len_ == max_len_) uniform_length_ = min_len_;
}

const Word& Substitution::image(Letter a) const {
  if (a >= images_.size()) throw InputError("letter id " + std::to_string(a) + " out of range");
  return images_[a];
}

void substitute_append(const Substitution& sub, WordView w, Word& out) {
  for (Letter c : w) {
    const Word& img = sub.image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
}

Word substitute(const Substitution& sub, WordView w) {
  std::size_t total = 0;
  for (Letter c : w) total += sub.image(c).size();
  Word out;
  out.reserve(total);
  substitute_append(sub, w, out);
  return out;
}

std::vector<std::uint64_t> iterate_lengths(const Substitution& sub, unsigned k) {
  const IncidenceMatrix mk = incidence(sub).pow(k);
  std::vector<std::uint64_t> lengths(sub.alphabet_size());
  for (std::size_t a = 0; a < lengths.size(); ++a) lengths[a] = mk.row_sum(a);
  return lengths;
}

Word iterate_word(const Substitution& sub, WordView w, unsigned k, std::size_t cap) {
  if (!sub.alphabet().contains_all(w)) throw InputError("word contains a letter outside the alphabet");
  const auto lengths = iterate_lengths(sub, k);
  std::uint64_t total = 0;
  for (Letter c : w) {
    if (__builtin_add_overflow(total, lengths[c], &total)) total = IncidenceMatrix::kSaturated;
  }
  if (total > cap)
    throw ResourceError("iterate of length " + std::to_string(total) + " exceeds cap of " + std::to_string(cap) +
                        " letters");
  Word cur(w.begin(), w.end());
  Word next;
  for (unsigned i = 0; i < k; ++i) {
    next.clear();
    substitute_append(sub, cur, next);
    cur.swap(next);
  }
  return cur;
}

Word iterate(const Substitution& sub, Letter a, unsigned k, std::size_t cap) {
  const Letter one[1] = {a};
  return iterate_word(sub, one, k, cap);
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (!(outer.alphabet() == inner.alphabet())) throw InputError("compose: alphabets differ");
  std::vector<Word> images;
  images.reserve(inner.alphabet_size());
  for (const Word& img : inner.images()) images.push_back(substitute(outer, img));
  return Substitution(inner.alphabet(), std::move(images));
}

Substitution power(const Substitution& sub, unsigned p) {
  if (p == 0) throw InputError("substitution power must be >= 1");
  Substitution result = sub;
  for (unsigned i = 1; i < p; ++i) result = compose(sub, result);
  return result;
}

IncidenceMatrix incidence(const Substitution& sub) {
  IncidenceMatrix m(sub.alphabet_size());
  for (std::size_t a = 0; a < sub.alphabet_size(); ++a)
    for (Letter b : sub.image(static_cast<Letter>(a))) m(a, b) += 1;
  return m;
}

bool is_primitive(const Substitution& sub) {
  const std::size_t n = sub.alphabet_size();
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  const IncidenceMatrix m = incidence(sub);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m(a, b) != 0) {
        fwd[a].push_back(b);
        bwd[b].push_back(a);
      }

  // BFS levels from letter 0; every vertex must be reached both ways.
  auto bfs = [n](const std::vector<std::vector<std::size_t>>& adj, std::vector<long>& level) {
    level.assign(n, -1);
    level[0] = 0;
    std::queue<std::size_t> q;
    q.push(0);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u])
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          q.push(v);
        }
    }
    return std::all_of(level.begin(), level.end(), [](long l) { return l >= 0; });
  };
  std::vector<long> level, back_level;
  if (!bfs(fwd, level) || !bfs(bwd, back_level)) return false;

  // The gcd of level(u) + 1 - level(v) over all edges is the graph's period.
  long g = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : fwd[u]) g = std::gcd(g, std::labs(level[u] + 1 - level[v]));
  return g == 1;
}

std::size_t wielandt_bound(std::size_t alphabet_size) noexcept {
  const std::size_t d = alphabet_size == 0 ? 0 : alphabet_size - 1;
  return d * d + 1;
}

unsigned positivity_index(const Substitution& sub) {
  if (!is_primitive(sub)) throw DomainError("positivity index undefined: substitution is not primitive");
  const IncidenceMatrix pattern = incidence(sub).pattern();
  IncidenceMatrix cur = pattern;
  const std::size_t bound = wielandt_bound(sub.alphabet_size());
  for (std::size_t p = 1; p <= bound; ++p) {
    if (cur.is_positive()) return static_cast<unsigned>(p);
    cur = (cur * pattern).pattern();
  }
  throw DomainError("no positive power within the Wielandt bound");
}

}  // namespace editdiam
