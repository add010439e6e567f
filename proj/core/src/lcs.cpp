#include "editdiam/lcs.hpp"

#include <algorithm>
#include <bit>

namespace editdiam {

std::string_view to_string(LcsEngine e) noexcept {
  switch (e) {
    case LcsEngine::dp:
      return "dp";
    case LcsEngine::bitparallel:
      return "bitparallel";
    case LcsEngine::band:
      return "band";
  }
  return "?";
}

std::optional<LcsEngine> parse_engine(std::string_view name) noexcept {
  if (name == "dp") return LcsEngine::dp;
  if (name == "bitparallel") return LcsEngine::bitparallel;
  if (name == "band") return LcsEngine::band;
  return std::nullopt;
}

std::size_t lcs_dp(WordView x, WordView y) {
  if (x.size() < y.size()) std::swap(x, y);
  // rows over x, one row of |y| + 1 cells
  std::vector<std::size_t> row(y.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = x[i] == y[j] ? diag + 1 : std::max(up, row[j]);
      diag = up;
    }
  }
  return row[y.size()];
}

BitParallelLcs::BitParallelLcs(WordView x) : n_(x.size()), blocks_((x.size() + 63) / 64) {
  Letter max_letter = 0;
  for (Letter c : x) max_letter = std::max(max_letter, c);
  letters_ = x.empty() ? 0 : static_cast<std::size_t>(max_letter) + 1;
  masks_.assign(letters_ * blocks_, 0);
  for (std::size_t i = 0; i < x.size(); ++i) masks_[x[i] * blocks_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t BitParallelLcs::lcs(WordView y) const {
  if (n_ == 0 || y.empty()) return 0;
  // V starts all ones; a zero bit at position i marks a match column.
  // Per letter: U = V & M[c]; V = (V + U) | (V - U).
  if (blocks_ == 1) {
    std::uint64_t v = ~std::uint64_t{0};
    for (Letter c : y) {
      if (c >= letters_) continue;
      const std::uint64_t u = v & masks_[c];
      v = (v + u) | (v - u);
    }
    const std::uint64_t live = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    return static_cast<std::size_t>(std::popcount(~v & live));
  }
  std::vector<std::uint64_t> v(blocks_, ~std::uint64_t{0});
  for (Letter c : y) {
    if (c >= letters_) continue;
    const std::uint64_t* m = masks_.data() + c * blocks_;
    std::uint64_t carry = 0;
    for (std::size_t b = 0; b < blocks_; ++b) {
      const std::uint64_t vb = v[b];
      const std::uint64_t u = vb & m[b];
      std::uint64_t sum;
      const bool c1 = __builtin_add_overflow(vb, u, &sum);
      const bool c2 = __builtin_add_overflow(sum, carry, &sum);
      carry = (c1 || c2) ? 1 : 0;
      v[b] = sum | (vb - u);
    }
  }
  std::size_t zeros = 0;
  for (std::size_t b = 0; b + 1 < blocks_; ++b) zeros += static_cast<std::size_t>(std::popcount(~v[b]));
  const std::size_t tail = n_ - 64 * (blocks_ - 1);
  const std::uint64_t live = tail == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  zeros += static_cast<std::size_t>(std::popcount(~v[blocks_ - 1] & live));
  return zeros;
}

std::size_t lcs_bitparallel(WordView x, WordView y) {
  if (x.size() > y.size()) std::swap(x, y);
  return BitParallelLcs(x).lcs(y);
}

std::optional<std::size_t> indel_ops_band(WordView x, WordView y, std::size_t max_ops) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(y.size());
  const std::size_t limit = std::min(max_ops, x.size() + y.size());
  if (static_cast<std::size_t>(std::abs(n - m)) > limit) return std::nullopt;
  const std::ptrdiff_t max_d = static_cast<std::ptrdiff_t>(limit);
  // far[k + offset]: furthest x-position reached on diagonal k = i - j.
  const std::ptrdiff_t offset = max_d + 1;
  std::vector<std::ptrdiff_t> far(static_cast<std::size_t>(2 * max_d + 3), 0);
  for (std::ptrdiff_t d = 0; d <= max_d; ++d) {
    for (std::ptrdiff_t k = -d; k <= d; k += 2) {
      std::ptrdiff_t i;
      if (k == -d || (k != d && far[k - 1 + offset] < far[k + 1 + offset]))
        i = far[k + 1 + offset];
      else
        i = far[k - 1 + offset] + 1;
      std::ptrdiff_t j = i - k;
      while (i < n && j < m && x[i] == y[j]) {
        ++i;
        ++j;
      }
      far[k + offset] = i;
      if (i >= n && j >= m) return static_cast<std::size_t>(d);
    }
  }
  return std::nullopt;
}

std::size_t lcs_length(WordView x, WordView y, LcsEngine engine) {
  switch (engine) {
    case LcsEngine::dp:
      return lcs_dp(x, y);
    case LcsEngine::bitparallel:
      return lcs_bitparallel(x, y);
    case LcsEngine::band: {
      const std::size_t ops = *indel_ops_band(x, y);
      return (x.size() + y.size() - ops) / 2;
    }
  }
  return 0;
}

}  // namespace editdiam
