#include "editdiam/thue_morse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <ostream>
#include <tuple>

#include "editdiam/error.hpp"
#include "editdiam/int128.hpp"

namespace editdiam {

Word tm_prefix(std::size_t n, std::size_t cap) {
  if (n == 0) throw InputError("tm_prefix: n must be >= 1");
  if (n > cap) throw ResourceError("tm_prefix: " + std::to_string(n) + " letters exceeds the cap");
  Word x(n);
  x[0] = 0;
  for (std::size_t i = 1; i < n; ++i) x[i] = (i % 2 == 0) ? x[i / 2] : 1 - x[i / 2];
  return x;
}

Word complement(WordView w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 1) throw InputError("complement: word is not binary");
    out[i] = 1 - w[i];
  }
  return out;
}

std::vector<PatternHits> forbidden_pattern_scan(std::size_t n, std::span<const Word> patterns) {
  if (patterns.empty()) throw InputError("forbidden_pattern_scan: no patterns");
  const Word x = tm_prefix(n);
  std::vector<PatternHits> out;
  for (const Word& p : patterns) {
    if (p.empty()) throw InputError("forbidden_pattern_scan: empty pattern");
    PatternHits hits{p, {}};
    const std::boyer_moore_horspool_searcher searcher(p.begin(), p.end());
    for (auto it = x.begin();;) {
      it = std::search(it, x.end(), searcher);
      if (it == x.end()) break;
      hits.positions.push_back(static_cast<std::size_t>(it - x.begin()));
      ++it;
    }
    out.push_back(std::move(hits));
  }
  return out;
}

std::vector<Word> overlap_patterns(std::size_t max_len) {
  std::vector<Word> out{{0, 1, 0, 1, 0}, {1, 0, 1, 0, 1}};
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word www;
      for (int rep = 0; rep < 3; ++rep)
        for (std::size_t i = 0; i < len; ++i) www.push_back(static_cast<Letter>((bits >> (len - 1 - i)) & 1));
      out.push_back(std::move(www));
    }
  return out;
}

std::vector<ShiftViolation> shift_property_check(std::size_t a_max, std::size_t k_max, std::size_t prefix_len) {
  const std::size_t len = prefix_len == 0 ? 2 * (a_max + k_max) : prefix_len;
  if (a_max + k_max > len) throw InputError("shift_property_check: prefix shorter than a_max + k_max");
  const Word x = tm_prefix(len);
  std::vector<ShiftViolation> out;
  // For each shift, run[i] = length of the longest complemented match
  // starting at (i, i + s); every k <= run[i] is a match of length k.
  std::vector<std::size_t> run(len + 1);
  const auto slen = static_cast<std::int64_t>(len);
  for (std::int64_t s = -(slen - 1); s <= slen - 1; ++s) {
    if (s == 0) continue;
    const std::size_t lo = s < 0 ? static_cast<std::size_t>(-s) : 0;
    const std::size_t hi = s < 0 ? len : len - static_cast<std::size_t>(s);
    run[hi] = 0;
    for (std::size_t i = hi; i-- > lo;)
      run[i] = x[i] != x[static_cast<std::size_t>(static_cast<std::int64_t>(i) + s)] ? run[i + 1] + 1 : 0;
    const std::size_t abs_s = static_cast<std::size_t>(s < 0 ? -s : s);
    for (std::size_t a = lo; a < std::min(a_max, hi); ++a) {
      const std::size_t reach = std::min(run[a], k_max);
      for (std::size_t k = 3 * abs_s + 1; k <= reach; ++k) out.push_back({a, s, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const ShiftViolation& l, const ShiftViolation& r) {
    return std::tie(l.a, l.s, l.k) < std::tie(r.a, r.s, r.k);
  });
  return out;
}

std::vector<std::vector<Word>> unit_shift_matches(std::size_t a_max, std::size_t k_max) {
  const Word x = tm_prefix(a_max + k_max + 1);
  std::vector<std::vector<Word>> out(k_max + 1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t a = 0; a < a_max; ++a) {
      bool match = true;
      for (std::size_t i = 0; i < k && match; ++i) match = x[a + i] != x[a + 1 + i];
      if (match) out[k].emplace_back(x.begin() + static_cast<std::ptrdiff_t>(a),
                                     x.begin() + static_cast<std::ptrdiff_t>(a + k));
    }
    std::sort(out[k].begin(), out[k].end());
    out[k].erase(std::unique(out[k].begin(), out[k].end()), out[k].end());
  }
  return out;
}

bool prop_c_holds(std::size_t n, HalfDistance d) {
  // dE + 1 >= sqrt(n/6)  <=>  6 (2 dE + 2)^2 >= 4 n, all in integers.
  const UInt128 lhs = static_cast<UInt128>(d.doubled() + 2) * (d.doubled() + 2) * 6;
  return lhs >= static_cast<UInt128>(n) * 4;
}

double blikstad_envelope(std::size_t n, double c) {
  if (n < 2) return 0.0;
  const double beta = std::sqrt(2.0 * std::log2(3.0));
  const double root = std::sqrt(std::log2(static_cast<double>(n)));
  return c * static_cast<double>(n) * root / std::exp2(beta * root);
}

std::vector<GrowthRecord> tm_growth(std::span<const std::size_t> n_list, double envelope_c,
                                    const ParallelOptions& par) {
  std::vector<GrowthRecord> out(n_list.size());
  if (n_list.empty()) return out;
  const std::size_t n_max = *std::max_element(n_list.begin(), n_list.end());
  const Word x = tm_prefix(n_max);
  const Word xbar = complement(x);
  parallel_for(n_list.size(), par, [&](std::size_t i) {
    const std::size_t n = n_list[i];
    if (n == 0) throw InputError("tm_growth: n must be >= 1");
    GrowthRecord& r = out[i];
    r.n = n;
    r.dE = indel_distance(WordView(x).first(n), WordView(xbar).first(n));
    r.bb = n - r.dE.doubled() / 2;
    r.lower = std::sqrt(static_cast<double>(n) / 6.0) - 1.0;
    r.upper = blikstad_envelope(n, envelope_c);
  });
  return out;
}

double fit_envelope_constant(std::span<const GrowthRecord> records) {
  double c = 0.0;
  for (const auto& r : records)
    if (r.n >= 2) c = std::max(c, r.dE.value() / blikstad_envelope(r.n, 1.0));
  return c;
}

void rescale_envelope(std::vector<GrowthRecord>& records, double c) {
  for (auto& r : records) r.upper = blikstad_envelope(r.n, c);
}

void write_bfile(std::ostream& out, std::span<const GrowthRecord> records) {
  for (const auto& r : records) out << r.n << ' ' << r.bb << '\n';
}

EnvelopeSelector EnvelopeSelector::dyadic() {
  return {[](std::size_t n) { return std::has_single_bit(n); },
          [](std::size_t n) { return n % 3 == 0 && std::has_single_bit(n / 3); }};
}

namespace {

double log_slope(std::span<const GrowthRecord> records, const std::function<bool(std::size_t)>& pick) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records)
    if (pick(r.n) && r.dE.doubled() > 0) pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.dE.value()));
  if (pts.size() < 2) throw InputError("growth_exponent_estimate: fewer than two points in an envelope");
  double mx = 0, my = 0;
  for (auto [px, py] : pts) {
    mx += px;
    my += py;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (auto [px, py] : pts) {
    sxy += (px - mx) * (py - my);
    sxx += (px - mx) * (px - mx);
  }
  if (sxx == 0) throw InputError("growth_exponent_estimate: envelope points share one n");
  return sxy / sxx;
}

}  // namespace

GrowthSlopes growth_exponent_estimate(std::span<const GrowthRecord> records, const EnvelopeSelector& select) {
  if (records.size() < 8) throw InputError("growth_exponent_estimate: need at least 8 records");
  std::size_t lo = records.front().n, hi = records.front().n;
  for (const auto& r : records) {
    lo = std::min(lo, r.n);
    hi = std::max(hi, r.n);
  }
  if (lo == 0 || hi < 8 * lo) throw InputError("growth_exponent_estimate: records span fewer than 3 octaves");
  return {log_slope(records, select.upper), log_slope(records, select.lower)};
}

}  // namespace editdiam
