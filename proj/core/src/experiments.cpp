#include "editdiam/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "editdiam/classify.hpp"
#include "editdiam/error.hpp"
#include "editdiam/language.hpp"

namespace editdiam {
namespace {

std::uint64_t ceil_power(double base, unsigned exponent) {
  const double v = std::ceil(std::pow(base, static_cast<double>(exponent)));
  if (!(v < 0x1p63)) throw InputError("rk range endpoint does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

Rational ratio_of(const RkPoint& p) {
  return Rational(static_cast<std::int64_t>(p.diam.doubled()), 2 * static_cast<std::int64_t>(p.n));
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> rk_range(unsigned k, double base) {
  if (k < 2) throw InputError("rk: k must be >= 2");
  if (!(base >= 2.0)) throw InputError("rk: base must be >= 2");
  const std::uint64_t lo = ceil_power(base, k * k);
  const std::uint64_t hi = ceil_power(base, (k + 1) * (k + 1));
  if (lo >= hi) throw InputError("rk: empty n-range");
  return {lo, hi};
}

std::vector<std::size_t> geometric_n_values(std::uint64_t lo, std::uint64_t hi, std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 0 || lo >= hi) return out;
  const double span = std::log(static_cast<double>(hi) / static_cast<double>(lo));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count);
    auto n = static_cast<std::uint64_t>(std::floor(static_cast<double>(lo) * std::exp(span * t)));
    n = std::clamp(n, lo, hi - 1);
    if (out.empty() || out.back() != n) out.push_back(static_cast<std::size_t>(n));
  }
  return out;
}

RkEstimate rk_assemble(unsigned k, double base, std::vector<RkPoint> points) {
  RkEstimate e;
  e.k = k;
  std::tie(e.n_lo, e.n_hi) = rk_range(k, base);
  e.base = base;
  std::sort(points.begin(), points.end(), [](const RkPoint& a, const RkPoint& b) { return a.n < b.n; });
  bool full = points.size() == e.n_hi - e.n_lo;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RkPoint& p = points[i];
    if (p.n < e.n_lo || p.n >= e.n_hi) throw InputError("rk: n = " + std::to_string(p.n) + " outside the range");
    if (i > 0 && points[i - 1].n == p.n) throw InputError("rk: duplicate n = " + std::to_string(p.n));
    full = full && p.exact;
    const Rational r = ratio_of(p);
    if (i == 0 || r > e.value) {
      e.value = r;
      e.argmax_n = p.n;
    }
  }
  e.exact = full && !points.empty();
  e.evaluated = std::move(points);
  return e;
}

RkEstimate rk_estimate(const Substitution& sub, unsigned k, double base, const SamplingSpec& spec,
                       const ParallelOptions& par) {
  const auto [lo, hi] = rk_range(k, base);
  LanguageOptions lopts;
  lopts.count_closure = false;
  lopts.letter_cap = spec.letter_cap;
  const std::size_t materialize = std::min(spec.letter_cap, std::size_t{1} << 24);

  std::vector<RkPoint> points;
  bool exact = !spec.force_sample && hi - lo <= spec.exact_max_range;
  if (exact) {
    std::vector<LanguageSet> sets;
    for (std::uint64_t n = lo; n < hi && exact; ++n) {
      sets.push_back(language(sub, static_cast<std::size_t>(n), lopts));
      exact = sets.back().size() <= spec.exact_max_words;
    }
    if (exact) {
      for (const LanguageSet& set : sets) {
        const DiameterReport r = diameter(set, DiameterMode::exhaustive(), par);
        points.push_back({set.n, r.value, true});
      }
    }
  }
  if (!exact) {
    if (!spec.allow_sampling) throw InputError("rk: the n-range needs sampled mode, which requires a seed");
    for (std::size_t n : geometric_n_values(lo, hi, spec.n_count)) {
      const FactorSampler sampler(sub, n, materialize);
      const DiameterReport r = sampled_diameter(sampler, spec.pairs_per_n, mix_seed(spec.seed ^ n), par);
      points.push_back({n, r.value, false});
    }
  }
  return rk_assemble(k, base, std::move(points));
}

std::string_view to_string(RecursionStatus s) noexcept {
  switch (s) {
    case RecursionStatus::consistent:
      return "CONSISTENT";
    case RecursionStatus::violation_candidate:
      return "VIOLATION_CANDIDATE";
    case RecursionStatus::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

RecursionReport rk_recursion_check(const Substitution& sub, const RkEstimate& rk, const RkEstimate& rk_next) {
  const auto ell = sub.uniform_length();
  if (!ell || *ell < 2) throw DomainError("rk recursion needs an l-uniform substitution with l > 1");
  if (!incidence(sub).has_nonzero_column()) throw DomainError("rk recursion needs an incidence column with no zero");
  if (rk_next.k != rk.k + 1) throw InputError("rk recursion needs estimates for k and k + 1");

  RecursionReport rep;
  rep.k = rk.k;
  rep.ell = *ell;
  const auto l = static_cast<std::int64_t>(*ell);
  std::int64_t lk = 1;
  for (unsigned i = 0; i < rk.k; ++i) {
    if (lk > std::numeric_limits<std::int64_t>::max() / l) throw ResourceError("l^k overflows");
    lk *= l;
  }
  rep.lhs = rk_next.value;
  rep.rhs = Rational(1, lk) + Rational(2 * l * l - 1, 2 * l * l) * rk.value;
  if (rep.lhs <= rep.rhs)
    rep.status = RecursionStatus::consistent;
  else
    rep.status = rk.exact ? RecursionStatus::violation_candidate : RecursionStatus::inconclusive;

  if (rk_next.k >= 3) {
    const double lambda = 1.0 - 1.0 / (2.0 * static_cast<double>(l * l));
    rep.decay_bound = 3.0 * std::pow(lambda, static_cast<double>(rk_next.k));
    rep.decay_holds = rk_next.value.to_double() <= *rep.decay_bound;
  }
  return rep;
}

bool words_power_equality(const Substitution& sub, std::size_t n_max) {
  if (!is_primitive(sub)) throw DomainError("words_power_equality: substitution is not primitive");
  const Substitution tau = power(sub, positivity_index(sub));
  LanguageOptions opts;
  opts.count_closure = false;
  for (std::size_t n = 1; n <= n_max; ++n)
    if (language(sub, n, opts).words != language(tau, n, opts).words) return false;
  return true;
}

DiamCurve diam_curve(const Substitution& sub, std::span<const std::size_t> n_list, const CurveMode& mode,
                     const ParallelOptions& par) {
  if (!is_primitive(sub)) {
    const Verdict v = analyze(sub).verdict;
    if (v != Verdict::sublinear)
      throw DomainError("diam_curve: verdict is " + std::string(to_string(v)) + " and the substitution is not primitive");
  }
  DiamCurve curve;
  LanguageOptions lopts;
  lopts.count_closure = false;
  lopts.letter_cap = mode.letter_cap;
  for (std::size_t n : n_list) {
    if (n == 0) throw InputError("diam_curve: n must be >= 1");
    CurveRow row;
    row.n = n;
    if (mode.exact) {
      row.diam = diameter(language(sub, n, lopts), DiameterMode::exhaustive(), par).value;
      row.exact = true;
    } else {
      const FactorSampler sampler(sub, n, std::min(mode.letter_cap, std::size_t{1} << 24));
      row.diam = sampled_diameter(sampler, mode.budget, mix_seed(mode.seed ^ n), par).value;
    }
    row.ratio = row.diam.value() / static_cast<double>(n);
    curve.rows.push_back(row);
  }

  auto shape = [](std::size_t n) {
    const double x = static_cast<double>(n);
    return x / std::sqrt(std::log(x));
  };
  const CurveRow* anchor = nullptr;
  for (const CurveRow& r : curve.rows)
    if (r.n >= 2 && (!anchor || r.n < anchor->n)) anchor = &r;
  if (anchor) {
    const double scale = anchor->diam.value() / shape(anchor->n);
    for (CurveRow& r : curve.rows) r.envelope = r.n >= 2 ? scale * shape(r.n) : 0.0;
  }

  std::vector<std::pair<double, double>> pts;
  for (const CurveRow& r : curve.rows)
    if (r.n >= 2 && r.ratio > 0) pts.emplace_back(std::sqrt(std::log(static_cast<double>(r.n))), std::log(r.ratio));
  if (pts.size() >= 2) {
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (sxx > 0) curve.alpha = std::exp(sxy / sxx);
  }
  return curve;
}

}  // namespace editdiam
