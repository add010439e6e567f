#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "editdiam/alphabet.hpp"
#include "editdiam/distance.hpp"
#include "editdiam/parallel.hpp"

namespace editdiam {

/// x_[0,n) over letters {0, 1}: x_0 = 0, x_2i = x_i, x_2i+1 = 1 - x_i.
/// InputError for n = 0, ResourceError above cap.
Word tm_prefix(std::size_t n, std::size_t cap = kDefaultLetterCap);

/// Bitwise complement of a binary word.
Word complement(WordView w);

struct PatternHits {
  Word pattern;
  std::vector<std::size_t> positions;
};

/// Occurrence positions of each pattern in x_[0,n). InputError when the list
/// or any pattern is empty.
std::vector<PatternHits> forbidden_pattern_scan(std::size_t n, std::span<const Word> patterns);

/// www for every binary w with 1 <= Len(w) <= max_len, plus 01010 and 10101.
std::vector<Word> overlap_patterns(std::size_t max_len);

struct ShiftViolation {
  std::size_t a = 0;
  std::int64_t s = 0;
  std::size_t k = 0;
};

/// Every (a, s, k) with a < a_max, 1 <= k <= k_max, s != 0 and both windows
/// inside x_[0,L) such that x_[a,a+k) is the complement of x_[a+s,a+s+k) and
/// 3|s| < k. L defaults to 2 (a_max + k_max).
std::vector<ShiftViolation> shift_property_check(std::size_t a_max, std::size_t k_max, std::size_t prefix_len = 0);

/// Words w = x_[a,a+k) equal to the complement of x_[a+1,a+1+k), by k, for
/// 1 <= k <= k_max and a < a_max. Sorted and deduplicated per k.
std::vector<std::vector<Word>> unit_shift_matches(std::size_t a_max, std::size_t k_max);

/// Exact 6 (dE + 1)^2 >= n, i.e. dE >= sqrt(n / 6) - 1 without rounding.
bool prop_c_holds(std::size_t n, HalfDistance d);

/// Reference curve c n sqrt(log2 n) / 2^(beta sqrt(log2 n)) with
/// beta = sqrt(2 log2 3). Zero at n = 1.
double blikstad_envelope(std::size_t n, double c);

struct GrowthRecord {
  std::size_t n = 0;
  HalfDistance dE;
  std::uint64_t bb = 0;
  double lower = 0.0;
  double upper = 0.0;
};

/// dE(x_[0,n), complement) for each n, in the order given.
std::vector<GrowthRecord> tm_growth(std::span<const std::size_t> n_list, double envelope_c = 1.0,
                                    const ParallelOptions& par = {});

/// Smallest c with dE <= blikstad_envelope(n, c) on every record with n >= 2.
double fit_envelope_constant(std::span<const GrowthRecord> records);

/// Rewrites the upper column for a new constant.
void rescale_envelope(std::vector<GrowthRecord>& records, double c);

/// Two columns "n bb(n)", one record per line.
void write_bfile(std::ostream& out, std::span<const GrowthRecord> records);

struct EnvelopeSelector {
  std::function<bool(std::size_t)> upper;
  std::function<bool(std::size_t)> lower;

  /// n = 2^k against n = 3 * 2^k.
  static EnvelopeSelector dyadic();
};

struct GrowthSlopes {
  double upper = 0.0;
  double lower = 0.0;
};

/// Least-squares slope of log dE against log n over each selected subset.
/// InputError with fewer than 8 records, less than 3 octaves of n, or fewer
/// than two usable points in a subset.
GrowthSlopes growth_exponent_estimate(std::span<const GrowthRecord> records,
                                      const EnvelopeSelector& select = EnvelopeSelector::dyadic());

}  // namespace editdiam
