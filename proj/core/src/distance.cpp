#include "editdiam/distance.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "editdiam/error.hpp"

namespace editdiam {
namespace {

// Band wins over the bit-parallel engine once the indel count is small
// relative to the total length; see benchmarks/bench_lcs.cpp.
constexpr std::size_t kBandDivisor = 32;

bool disjoint_letters(WordView x, WordView y) {
  Letter max_letter = 0;
  for (Letter c : x) max_letter = std::max(max_letter, c);
  std::vector<bool> present(static_cast<std::size_t>(max_letter) + 1, false);
  for (Letter c : x) present[c] = true;
  for (Letter c : y)
    if (c <= max_letter && present[c]) return false;
  return true;
}

bool is_subsequence(const Word& s, WordView of) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < of.size() && i < s.size(); ++j)
    if (of[j] == s[i]) ++i;
  return i == s.size();
}

}  // namespace

std::string HalfDistance::to_string() const {
  if (integral()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

LcsEngine select_engine(WordView x, WordView y) {
  const std::size_t total = x.size() + y.size();
  if (total == 0) return LcsEngine::band;
  // 2 * Hamming(aligned prefix) + length gap bounds the indel count above.
  const std::size_t common = std::min(x.size(), y.size());
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < common; ++i) mismatches += x[i] != y[i] ? 1 : 0;
  const std::size_t bound = 2 * mismatches + (total - 2 * common);
  return bound <= total / kBandDivisor ? LcsEngine::band : LcsEngine::bitparallel;
}

HalfDistance indel_distance(WordView x, WordView y, LcsEngine engine) {
  const std::size_t s = lcs_length(x, y, engine);
  return HalfDistance(x.size() + y.size() - 2 * s);
}

HalfDistance indel_distance(WordView x, WordView y) {
  const std::size_t total = x.size() + y.size();
  std::size_t lo = 0;
  while (lo < x.size() && lo < y.size() && x[lo] == y[lo]) ++lo;
  std::size_t hi = 0;
  while (hi < x.size() - lo && hi < y.size() - lo && x[x.size() - 1 - hi] == y[y.size() - 1 - hi]) ++hi;
  const WordView xc = x.subspan(lo, x.size() - lo - hi);
  const WordView yc = y.subspan(lo, y.size() - lo - hi);
  std::size_t s = lo + hi;
  if (!xc.empty() && !yc.empty() && !disjoint_letters(xc, yc)) s += lcs_length(xc, yc, select_engine(xc, yc));
  return HalfDistance(total - 2 * s);
}

HalfDistance indel_distance_oracle(WordView x, WordView y) {
  if (x.size() + y.size() > 24) throw InputError("indel_distance_oracle: |x| + |y| must be <= 24");
  const Word start(x.begin(), x.end());
  const Word target(y.begin(), y.end());
  std::vector<Letter> letters(target.begin(), target.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  // Any optimal operation sequence can be reordered into deletions followed
  // by insertions, and those insertions can keep every intermediate word a
  // subsequence of y; insertions are restricted accordingly.
  std::unordered_map<Word, std::size_t, WordHash> dist;
  std::deque<Word> queue;
  dist.emplace(start, 0);
  queue.push_back(start);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(cur);
    if (cur == target) return HalfDistance(d);
    auto visit = [&](Word next) {
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    };
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Word next = cur;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      visit(std::move(next));
    }
    if (cur.size() < target.size() && is_subsequence(cur, target)) {
      for (std::size_t i = 0; i <= cur.size(); ++i)
        for (Letter c : letters) {
          Word next = cur;
          next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), c);
          if (is_subsequence(next, target)) visit(std::move(next));
        }
    }
  }
  throw Error("indel_distance_oracle: target unreachable");
}

bool subadditivity_check(WordView x, WordView y, WordView x_tilde, WordView y_tilde) {
  Word xy(x.begin(), x.end());
  xy.insert(xy.end(), y.begin(), y.end());
  Word xyt(x_tilde.begin(), x_tilde.end());
  xyt.insert(xyt.end(), y_tilde.begin(), y_tilde.end());
  const HalfDistance lhs = indel_distance(xy, xyt, LcsEngine::dp);
  const HalfDistance rhs = indel_distance(x, x_tilde, LcsEngine::dp) + indel_distance(y, y_tilde, LcsEngine::dp);
  return lhs <= rhs;
}

}  // namespace editdiam
