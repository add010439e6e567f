#include "editdiam/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "editdiam/error.hpp"

namespace editdiam {
namespace {

std::vector<double> to_dense(const IncidenceMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = static_cast<double>(m(i, j));
  return d;
}

double eval_poly(const std::vector<double>& coeffs, double x) {
  double r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace

double power_iteration(const IncidenceMatrix& m, double tolerance, unsigned max_iterations,
                       std::vector<double>* eigvec, unsigned* iterations) {
  const std::size_t n = m.dim();
  const auto a = to_dense(m);
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
  double lambda = 0.0;
  for (unsigned it = 1; it <= max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * v[j];
      w[i] = s;
    }
    // v sums to 1, so the 1-norm of Mv is the Rayleigh-type estimate.
    const double next = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(next > 0.0)) throw DomainError("power iteration collapsed to zero");
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = w[i] / next;
      change = std::max(change, std::abs(vi - v[i]));
      v[i] = vi;
    }
    const bool converged = std::abs(next - lambda) <= tolerance * next && change <= tolerance;
    lambda = next;
    if (converged) {
      if (eigvec) *eigvec = v;
      if (iterations) *iterations = it;
      return lambda;
    }
  }
  throw DomainError("power iteration did not converge");
}

std::vector<double> characteristic_polynomial(const IncidenceMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = m.dim();
  const auto a = to_dense(m);
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[n] = 1.0;
  std::vector<double> mk(n * n, 0.0), am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += coeffs[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t t = 0; t < n; ++t) s += a[i * n + t] * mk[t * n + j];
        am[i * n + j] = s;
      }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    coeffs[n - k] = -tr / static_cast<double>(k);
    mk = am;
  }
  return coeffs;
}

double perron_root_bisection(const IncidenceMatrix& m) {
  const auto coeffs = characteristic_polynomial(m);
  double hi = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) hi = std::max(hi, static_cast<double>(m.row_sum(r)));
  hi += 1.0;
  // Above the Perron root the monic polynomial is positive; step down until
  // the sign changes, then bisect.
  const double step = hi / 65536.0;
  double upper = hi;
  double lower = hi - step;
  while (lower > -step && eval_poly(coeffs, lower) > 0.0) {
    upper = lower;
    lower -= step;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lower + upper);
    if (eval_poly(coeffs, mid) > 0.0)
      upper = mid;
    else
      lower = mid;
  }
  return 0.5 * (lower + upper);
}

PerronData perron(const Substitution& sub, const PerronOptions& opts) {
  PerronData data;
  data.p = positivity_index(sub);
  const IncidenceMatrix mp = incidence(sub).pow(data.p);
  data.lambda = power_iteration(mp, opts.tolerance, opts.max_iterations, &data.eigvec, &data.iterations);
  const auto bounds = length_ratio_bounds(sub, data, 1, opts.window);
  data.empirical_c1 = bounds.c1;
  data.empirical_C2 = bounds.C2;
  return data;
}

LengthRatioBounds length_ratio_bounds(const Substitution& sub, const PerronData& data, unsigned n_from,
                                      unsigned n_to) {
  if (n_from < 1 || n_to < n_from) throw InputError("length_ratio_bounds: empty window");
  const auto mp = to_dense(incidence(sub).pow(data.p));
  const std::size_t d = sub.alphabet_size();
  // lengths[a] = Len(tau^n(a)) = (M_tau^n 1)_a, carried in doubles and
  // rescaled by lambda each step so nothing overflows.
  std::vector<double> scaled(d, 1.0), next(d);
  LengthRatioBounds out{std::numeric_limits<double>::infinity(), 0.0};
  for (unsigned n = 1; n <= n_to; ++n) {
    for (std::size_t i = 0; i < d; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += mp[i * d + j] * scaled[j];
      next[i] = s / data.lambda;
    }
    scaled.swap(next);
    if (n < n_from) continue;
    for (double r : scaled) {
      out.c1 = std::min(out.c1, r);
      out.C2 = std::max(out.C2, r);
    }
  }
  return out;
}

}  // namespace editdiam
