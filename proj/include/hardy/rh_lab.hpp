#pragma once

// Distance experiments built on the projection engine: the Baez-Duarte
// sequence d_K = dist(1, span{h_2..h_K}), the orthogonality of the
// differences h_k - h_l to 1 - z, and cyclicity scans for W_n orbits.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/projection.hpp"
#include "hardy/semigroup.hpp"
#include "hardy/series.hpp"
#include "hardy/special_functions.hpp"

namespace hardy {

struct bd_entry {
  long k_max = 2;
  distance_report report;
};

struct bd_sequence {
  std::size_t degree = 0;
  std::vector<bd_entry> entries;
};

/// d_K for K = 2..k_max at truncation degree N, from a single factorization of
/// [h_2, ..., h_{k_max}].
inline bd_sequence baez_duarte_sequence(long k_max, std::size_t degree, double rank_tolerance = 1e-10) {
  if (k_max < 2)
    throw lab_error(errc::index_out_of_range, "k_max must be >= 2, got " + std::to_string(k_max));
  const auto basis = hk_family(2, k_max, degree);
  const span_problem p = make_span_problem(coeff_series::constant(1.0, degree), basis, degree);
  auto reports = distance_to_prefixes(p, rank_tolerance);
  bd_sequence out;
  out.degree = degree;
  out.entries.reserve(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    out.entries.push_back({static_cast<long>(i) + 2, std::move(reports[i])});
  return out;
}

/// sqrt(1 - |<1, h>|^2 / ||h||^2): distance from 1 to the line through h.
inline double one_vector_distance_from_one(const coeff_series &h) {
  const double nh = norm(h);
  const double proj = std::abs(h[0]) / nh;
  return std::sqrt(std::max(0.0, 1.0 - proj * proj));
}

/// Bound on |d_K(N2) - d_K(N1)| for N1 < N2: the truncated problems differ
/// only in rows N1+1..N2, so 0 <= d_K(N2) - d_K(N1) <= sum_i |c_i| tail_i,
/// with c the optimal coefficients at N1 for basis h_2..h_K and tail_i the
/// decay bound on rows N1+1..N2 of h_{i+2}.
inline double bd_truncation_bound(const std::vector<cplx> &coefficients, std::size_t from_degree,
                                  std::size_t to_degree) {
  double bound = 0.0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    bound += std::abs(coefficients[i]) * hk_tail_bound(static_cast<long>(i) + 2, from_degree + 1, to_degree);
  return bound;
}

/// max over 2 <= k < l <= k_max of |<h_k - h_l, 1 - z>|.
inline double m_subspace_orthogonality(long k_max, std::size_t degree = 1) {
  if (k_max < 3)
    throw lab_error(errc::index_out_of_range, "k_max must be >= 3, got " + std::to_string(k_max));
  degree = std::max<std::size_t>(degree, 1);
  const auto hs = hk_family(2, k_max, degree);
  const coeff_series one_minus_z = coeff_series::polynomial({1.0, -1.0}, degree);
  double worst = 0.0;
  for (std::size_t a = 0; a < hs.size(); ++a)
    for (std::size_t b = a + 1; b < hs.size(); ++b)
      worst = std::max(worst, std::abs(inner(hs[a] - hs[b], one_minus_z)));
  return worst;
}

/// [W_1 f, ..., W_{n_max} f], each truncated to `degree`. f must be valid
/// through `degree`.
inline std::vector<coeff_series> w_orbit(const coeff_series &f, long n_max, std::size_t degree) {
  if (n_max < 1)
    throw lab_error(errc::index_out_of_range, "n_max must be >= 1");
  std::vector<coeff_series> orbit;
  orbit.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n)
    orbit.push_back(truncate(apply_w(n, f), degree));
  return orbit;
}

/// Distance of each target to span{W_1 f, ..., W_{n_max} f} on coefficients
/// 0..degree.
inline std::vector<distance_report> cyclicity_scan(const coeff_series &f, long n_max,
                                                   const std::vector<coeff_series> &targets, std::size_t degree,
                                                   double rank_tolerance = 1e-10) {
  if (n_max < 2)
    throw lab_error(errc::index_out_of_range, "n_max must be >= 2, got " + std::to_string(n_max));
  return distance_to_span_many(targets, w_orbit(f, n_max, degree), degree, rank_tolerance);
}

/// p_{m,lambda}(z) = z^m + ... + z - lambda, valid through `degree`.
inline coeff_series cyclic_polynomial(std::size_t m, cplx lambda, std::size_t degree) {
  std::vector<cplx> c(m + 1, cplx{1.0});
  c[0] = -lambda;
  return coeff_series::polynomial(std::move(c), std::max(m, degree));
}

/// max over 1 <= n <= n_max of |<W_n f, 1 - z>|, for f with f(0) = f(1).
inline double non_cyclicity_witness(const coeff_series &f, long n_max, double hypothesis_tolerance = 1e-14) {
  if (n_max < 1)
    throw lab_error(errc::index_out_of_range, "n_max must be >= 1");
  if (f.valid_degree() < 1)
    throw lab_error(errc::truncation_too_short, "need coefficients 0 and 1");
  if (std::abs(f[0] - f[1]) > hypothesis_tolerance)
    throw lab_error(errc::hypothesis_violated, "f(0) != f(1)");
  // Only coefficients 0 and 1 of W_n f enter, and those depend on f(0), f(1).
  const coeff_series head = truncate(f, 1);
  const coeff_series one_minus_z = coeff_series::polynomial({1.0, -1.0});
  double worst = 0.0;
  for (long n = 1; n <= n_max; ++n)
    worst = std::max(worst, std::abs(inner(apply_w(n, head), one_minus_z)));
  return worst;
}

} // namespace hardy
