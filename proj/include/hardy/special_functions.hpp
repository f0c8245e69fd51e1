#pragma once

// The functions h_k(z) = log((1 + z + ... + z^{k-1}) / k) / (1 - z) whose span
// is tied to the Baez-Duarte criterion, and the local Dirichlet energy at 1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/series.hpp"

namespace hardy {

/// Index k >= 2 and truncation degree N of an h_k request.
struct hk_request {
  long k;
  std::size_t degree;
};

namespace detail {

inline void check_hk_index(long k) {
  if (k < 2)
    throw lab_error(errc::index_out_of_range, "h_k needs k >= 2, got " + std::to_string(k));
}

} // namespace detail

/// H_0..H_top by forward accumulation.
inline std::vector<double> harmonic_numbers(std::size_t top) {
  std::vector<double> h(top + 1, 0.0);
  for (std::size_t m = 1; m <= top; ++m)
    h[m] = h[m - 1] + 1.0 / static_cast<double>(m);
  return h;
}

/// h_k(j) = H_j - H_{floor(j/k)} - log k, using a precomputed harmonic table
/// that reaches at least `degree`.
inline coeff_series hk_closed_form(long k, std::size_t degree, const std::vector<double> &harmonic) {
  detail::check_hk_index(k);
  if (harmonic.size() <= degree)
    throw lab_error(errc::truncation_too_short, "harmonic table shorter than requested degree");
  const auto kk = static_cast<std::size_t>(k);
  const double log_k = std::log(static_cast<double>(k));
  std::vector<cplx> c(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j)
    c[j] = harmonic[j] - harmonic[j / kk] - log_k;
  return coeff_series(std::move(c));
}

inline coeff_series hk_closed_form(const hk_request &req) {
  detail::check_hk_index(req.k);
  return hk_closed_form(req.k, req.degree, harmonic_numbers(req.degree));
}

/// Independent route to h_k: build (1 + ... + z^{k-1})/k, take formal_log,
/// then cumsum.
inline coeff_series hk_oracle(const hk_request &req) {
  detail::check_hk_index(req.k);
  const auto kk = static_cast<std::size_t>(req.k);
  std::vector<cplx> c(std::max(kk, req.degree + 1), cplx{});
  for (std::size_t r = 0; r < kk; ++r)
    c[r] = 1.0 / static_cast<double>(kk);
  c.resize(req.degree + 1);
  return cumsum(formal_log(coeff_series(std::move(c))));
}

/// h_first..h_last at a common degree, generated in parallel.
inline std::vector<coeff_series> hk_family(long first, long last, std::size_t degree) {
  detail::check_hk_index(first);
  const std::vector<double> harmonic = harmonic_numbers(degree);
  const std::size_t count = last >= first ? static_cast<std::size_t>(last - first + 1) : 0;
  std::vector<coeff_series> out(count);
  parallel_for(count, [&](std::size_t i) {
    out[i] = hk_closed_form(first + static_cast<long>(i), degree, harmonic);
  });
  return out;
}

/// Upper bound on the norm of coefficients from..to of h_k, from
/// |h_k(j)| <= k/(j+1) for j >= 1.
inline double hk_tail_bound(long k, std::size_t from, std::size_t to) {
  double acc = 0.0;
  const auto kk = static_cast<double>(k);
  for (std::size_t j = std::max<std::size_t>(from, 1); j <= to; ++j) {
    const double b = kk / static_cast<double>(j + 1);
    acc += b * b;
  }
  return std::sqrt(acc);
}

/// Truncated tail-sum energy sum_{i=0}^{N} |sum_{j=i+1}^{N} f(j)|^2 with
/// N = valid_f, in one backward pass. Exact for polynomials of degree <= N.
inline double dirichlet_energy_at_one(const coeff_series &f) {
  double energy = 0.0;
  cplx tail{};
  for (std::size_t i = f.valid_degree() + 1; i-- > 0;) {
    // tail == sum_{j > i} f(j)
    energy += std::norm(tail);
    tail += f[i];
  }
  return energy;
}

} // namespace hardy
