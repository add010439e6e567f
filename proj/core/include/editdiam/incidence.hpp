#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace editdiam {

/// Square matrix of nonnegative integers. Products saturate at
/// kSaturated so that positivity patterns survive large powers.
class IncidenceMatrix {
 public:
  static constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

  IncidenceMatrix() = default;
  explicit IncidenceMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}
  static IncidenceMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * dim_ + col]; }
  std::uint64_t& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * dim_ + col]; }

  std::uint64_t row_sum(std::size_t row) const noexcept;
  bool is_positive() const noexcept;
  bool has_zero() const noexcept { return !is_positive(); }
  bool has_nonzero_column() const noexcept;
  /// Entrywise 0/1 pattern.
  IncidenceMatrix pattern() const;
  IncidenceMatrix pow(unsigned exponent) const;

  friend IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b);
  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> entries_;
};

}  // namespace editdiam
