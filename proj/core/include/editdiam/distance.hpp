#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "editdiam/alphabet.hpp"
#include "editdiam/lcs.hpp"

namespace editdiam {

/// Indel edit distance d_E stored as the integer 2 d_E, which is exact even
/// when |x| + |y| is odd.
class HalfDistance {
 public:
  constexpr HalfDistance() = default;
  constexpr explicit HalfDistance(std::uint64_t doubled) : doubled_(doubled) {}

  constexpr std::uint64_t doubled() const noexcept { return doubled_; }
  constexpr bool integral() const noexcept { return doubled_ % 2 == 0; }
  double value() const noexcept { return static_cast<double>(doubled_) / 2.0; }
  /// "2" or "5/2".
  std::string to_string() const;

  friend constexpr auto operator<=>(HalfDistance, HalfDistance) = default;
  friend constexpr HalfDistance operator+(HalfDistance a, HalfDistance b) {
    return HalfDistance(a.doubled_ + b.doubled_);
  }

 private:
  std::uint64_t doubled_ = 0;
};

/// Engine chosen by indel_distance() when none is given.
LcsEngine select_engine(WordView x, WordView y);

/// d_E(x, y) = (|x| + |y|) / 2 - LCS(x, y). Common prefixes and suffixes are
/// stripped and disjoint letter sets short-circuit to LCS = 0 before an engine
/// runs; the remaining core goes to select_engine().
HalfDistance indel_distance(WordView x, WordView y);
HalfDistance indel_distance(WordView x, WordView y, LcsEngine engine);

/// Breadth-first search over single-letter insertions and deletions; half
/// the minimal number of operations. InputError when |x| + |y| > 24.
HalfDistance indel_distance_oracle(WordView x, WordView y);

/// d_E(x y, xt yt) <= d_E(x, xt) + d_E(y, yt), both sides evaluated exactly.
bool subadditivity_check(WordView x, WordView y, WordView x_tilde, WordView y_tilde);

}  // namespace editdiam
