#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "editdiam/diameter.hpp"
#include "editdiam/rational.hpp"
#include "editdiam/substitution.hpp"

namespace editdiam {

/// [ceil(base^(k^2)), ceil(base^((k+1)^2))). InputError when k < 2, base < 2
/// or the range is empty or does not fit in 64 bits.
std::pair<std::uint64_t, std::uint64_t> rk_range(unsigned k, double base);

struct SamplingSpec {
  /// Number of geometrically spaced n values in sampled mode.
  std::size_t n_count = 8;
  std::uint64_t pairs_per_n = 1000;
  std::uint64_t seed = 0;
  /// Exact mode is used when the range has at most this many n values and
  /// every W_n has at most exact_max_words members.
  std::size_t exact_max_range = 1024;
  std::size_t exact_max_words = 4096;
  bool force_sample = false;
  /// When false, an estimate that would need sampling throws InputError.
  bool allow_sampling = true;
  std::size_t letter_cap = kDefaultLetterCap;
};

struct RkPoint {
  std::size_t n = 0;
  HalfDistance diam;
  bool exact = false;
};

struct RkEstimate {
  unsigned k = 0;
  double base = 0.0;
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  std::vector<RkPoint> evaluated;
  /// max diam / n over evaluated; ties go to the smaller n.
  Rational value;
  std::size_t argmax_n = 0;
  /// Every n of the range evaluated with an exact diameter.
  bool exact = false;
};

/// Builds an estimate from diameters computed elsewhere (e.g. fixtures).
RkEstimate rk_assemble(unsigned k, double base, std::vector<RkPoint> points);

RkEstimate rk_estimate(const Substitution& sub, unsigned k, double base, const SamplingSpec& spec,
                       const ParallelOptions& par = {});

/// n values used by sampled mode: n_count points spaced geometrically over
/// [lo, hi), rounded down and deduplicated.
std::vector<std::size_t> geometric_n_values(std::uint64_t lo, std::uint64_t hi, std::size_t count);

enum class RecursionStatus { consistent, violation_candidate, inconclusive };
std::string_view to_string(RecursionStatus s) noexcept;

struct RecursionReport {
  unsigned k = 0;
  std::uint64_t ell = 0;
  Rational lhs;
  /// 1 / l^k + (1 - 1 / (2 l^2)) r_k
  Rational rhs;
  RecursionStatus status = RecursionStatus::inconclusive;
  /// 3 (1 - 1/(2 l^2))^(k+1), the bound for r_{k+1} when k + 1 >= 3.
  std::optional<double> decay_bound;
  bool decay_holds = true;
};

/// Compares r_{k+1} against the one-step recursion. DomainError for a
/// non-uniform substitution or one without an all-nonzero column.
RecursionReport rk_recursion_check(const Substitution& sub, const RkEstimate& rk, const RkEstimate& rk_next);

/// language(sub, n) == language(sub^p, n) for n <= n_max, p the positivity
/// index. DomainError when sub is not primitive.
bool words_power_equality(const Substitution& sub, std::size_t n_max);

struct CurveRow {
  std::size_t n = 0;
  HalfDistance diam;
  bool exact = false;
  double ratio = 0.0;
  double envelope = 0.0;
};

struct DiamCurve {
  std::vector<CurveRow> rows;
  /// exp of the slope of ln(ratio) against sqrt(ln n); absent with fewer
  /// than two usable rows.
  std::optional<double> alpha;
};

struct CurveMode {
  bool exact = true;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t letter_cap = kDefaultLetterCap;
};

/// Diameters per n with the n / sqrt(ln n) envelope scaled to agree at the
/// smallest n >= 2. DomainError when the dichotomy verdict is FULL.
DiamCurve diam_curve(const Substitution& sub, std::span<const std::size_t> n_list, const CurveMode& mode,
                     const ParallelOptions& par = {});

}  // namespace editdiam
