#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "editdiam/alphabet.hpp"

namespace editdiam {

enum class LcsEngine {
  dp,           ///< full table, O(|x||y|) time, O(min) memory
  bitparallel,  ///< one machine word of x-positions per step
  band,         ///< greedy furthest-reaching diagonals, O((|x|+|y|) D)
};

std::string_view to_string(LcsEngine e) noexcept;
std::optional<LcsEngine> parse_engine(std::string_view name) noexcept;

/// Length of a longest common subsequence.
std::size_t lcs_length(WordView x, WordView y, LcsEngine engine);

std::size_t lcs_dp(WordView x, WordView y);
std::size_t lcs_bitparallel(WordView x, WordView y);

/// Minimal number of single-letter insertions and deletions turning x into
/// y, i.e. |x| + |y| - 2 LCS. Returns nullopt when it exceeds max_ops.
std::optional<std::size_t> indel_ops_band(WordView x, WordView y,
                                          std::size_t max_ops = static_cast<std::size_t>(-1));

/// Bit-parallel LCS against a fixed word x; the per-letter match masks are
/// built once and reused across many y. Safe to share across threads.
class BitParallelLcs {
 public:
  explicit BitParallelLcs(WordView x);

  std::size_t lcs(WordView y) const;
  std::size_t length() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::size_t blocks_ = 0;
  std::size_t letters_ = 0;
  /// masks_[c * blocks_ + b]: bit i of block b set iff x[64 b + i] == c.
  std::vector<std::uint64_t> masks_;
};

}  // namespace editdiam
