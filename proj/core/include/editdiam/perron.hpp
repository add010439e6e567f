#pragma once

#include <cstddef>
#include <vector>

#include "editdiam/incidence.hpp"
#include "editdiam/substitution.hpp"

namespace editdiam {

/// Perron data of a primitive substitution, taken on tau = sigma^p where p is
/// the minimal exponent making the incidence matrix positive.
struct PerronData {
  unsigned p = 0;
  double lambda = 0.0;
  /// Positive right eigenvector of M^p, entries sum to 1.
  std::vector<double> eigvec;
  /// min / max of Len(tau^n(a)) / lambda^n over n in [1, window] and all a.
  double empirical_c1 = 0.0;
  double empirical_C2 = 0.0;
  unsigned iterations = 0;
};

struct PerronOptions {
  unsigned window = 20;
  double tolerance = 1e-12;
  unsigned max_iterations = 100000;
};

/// DomainError when sub is not primitive.
PerronData perron(const Substitution& sub, const PerronOptions& opts = {});

/// Dominant eigenvalue of a positive matrix by power iteration from the
/// all-ones vector; eigvec receives the normalized eigenvector if non-null.
double power_iteration(const IncidenceMatrix& m, double tolerance, unsigned max_iterations,
                       std::vector<double>* eigvec = nullptr, unsigned* iterations = nullptr);

/// Coefficients c_0..c_d of det(xI - M), leading coefficient last (== 1).
std::vector<double> characteristic_polynomial(const IncidenceMatrix& m);

/// Largest real root of the characteristic polynomial, located by a
/// downward sign-change scan from the max row sum and refined by bisection.
/// Independent of power iteration; intended for small matrices (dim <= 4).
double perron_root_bisection(const IncidenceMatrix& m);

struct LengthRatioBounds {
  double c1 = 0.0;
  double C2 = 0.0;
};

/// min / max of Len(tau^n(a)) / lambda^n over n in [n_from, n_to] and all a,
/// with tau = sigma^p from data.
LengthRatioBounds length_ratio_bounds(const Substitution& sub, const PerronData& data, unsigned n_from,
                                      unsigned n_to);

}  // namespace editdiam
