#include "editdiam/incidence.hpp"

#include "editdiam/error.hpp"

namespace editdiam {
namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? IncidenceMatrix::kSaturated : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? IncidenceMatrix::kSaturated : r;
}

}  // namespace

IncidenceMatrix IncidenceMatrix::identity(std::size_t dim) {
  IncidenceMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

std::uint64_t IncidenceMatrix::row_sum(std::size_t row) const noexcept {
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < dim_; ++c) s = sat_add(s, (*this)(row, c));
  return s;
}

bool IncidenceMatrix::is_positive() const noexcept {
  for (auto e : entries_)
    if (e == 0) return false;
  return true;
}

bool IncidenceMatrix::has_nonzero_column() const noexcept {
  for (std::size_t c = 0; c < dim_; ++c) {
    bool all = true;
    for (std::size_t r = 0; r < dim_ && all; ++r) all = (*this)(r, c) != 0;
    if (all) return true;
  }
  return false;
}

IncidenceMatrix IncidenceMatrix::pattern() const {
  IncidenceMatrix p(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) p.entries_[i] = entries_[i] != 0 ? 1 : 0;
  return p;
}

IncidenceMatrix IncidenceMatrix::pow(unsigned exponent) const {
  IncidenceMatrix result = identity(dim_);
  IncidenceMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.dim_ != b.dim_) throw InputError("incidence matrix dimension mismatch");
  const std::size_t n = a.dim_;
  IncidenceMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = sat_add(c(i, j), sat_mul(aik, b(k, j)));
    }
  return c;
}

}  // namespace editdiam
