#pragma once

// Explicit eigenvectors of W_n^* for every lambda in the open disk of radius
// sqrt(n), grid scans over that disk, and the decay of the scaled adjoint
// powers that makes W_n / sqrt(n) a shift.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/semigroup.hpp"
#include "hardy/series.hpp"

namespace hardy {

struct eigen_pair {
  std::size_t n = 2;
  cplx lambda;
  std::size_t level = 1; ///< vector is known through degree n^level - 1
  coeff_series vector;
  double residual = 0.0;  ///< ||W_n^* v - lambda v|| on the adjoint window
  double tail_mass = 0.0; ///< norm of the top block, which the residual does not see
};

namespace detail {

inline constexpr std::size_t max_eigen_length = std::size_t{1} << 26;

inline std::size_t checked_power(std::size_t n, std::size_t level) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < level; ++i) {
    if (p > max_eigen_length / n)
      throw lab_error(errc::index_out_of_range, "n^level exceeds the supported series length");
    p *= n;
  }
  return p;
}

} // namespace detail

/// Coefficients: v(0) = 1 and v(j) = (lambda/n)^l (lambda - 1)/(n - 1) for
/// n^l <= j < n^{l+1}. Each block of n children then sums to lambda times
/// its parent, which is W_n^* v = lambda v.
inline eigen_pair eigenvector_w_star(long n, cplx lambda, std::size_t level) {
  if (n < 2)
    throw lab_error(errc::index_out_of_range, "eigenvectors need n >= 2, got " + std::to_string(n));
  if (level < 1)
    throw lab_error(errc::index_out_of_range, "truncation level must be >= 1");
  const auto nn = static_cast<std::size_t>(n);
  const double radius = std::sqrt(static_cast<double>(nn));
  if (!(std::abs(lambda) < radius))
    throw lab_error(errc::outside_spectral_ball,
                    "|lambda| = " + std::to_string(std::abs(lambda)) + " is not below sqrt(n) = " +
                        std::to_string(radius));

  const std::size_t length = detail::checked_power(nn, level);
  std::vector<cplx> c(length);
  c[0] = 1.0;
  const cplx ratio = lambda / static_cast<double>(nn);
  cplx block_value = (lambda - 1.0) / static_cast<double>(nn - 1);
  for (std::size_t start = 1; start < length; start *= nn) {
    for (std::size_t j = start; j < start * nn; ++j)
      c[j] = block_value;
    block_value *= ratio;
  }

  eigen_pair out;
  out.n = nn;
  out.lambda = lambda;
  out.level = level;
  out.vector = coeff_series(std::move(c));
  const coeff_series image = apply_w_star(n, out.vector);
  out.residual = norm(axpy(-lambda, out.vector, image));
  double tail = 0.0;
  for (std::size_t j = length / nn; j < length; ++j)
    tail += std::norm(out.vector[j]);
  out.tail_mass = std::sqrt(tail);
  return out;
}

/// ||v|| for the eigenvector above, from its block structure: level l holds
/// n^l (n-1) equal coefficients, so
///   ||v||^2 = 1 + |lambda-1|^2/(n-1) * sum_{l<level} (|lambda|^2/n)^l.
inline double eigenvector_norm_closed_form(long n, cplx lambda, std::size_t level) {
  const auto nd = static_cast<double>(n);
  const double q = std::norm(lambda) / nd;
  const double geometric = (q == 1.0) ? static_cast<double>(level)
                                      : (1.0 - std::pow(q, static_cast<double>(level))) / (1.0 - q);
  return std::sqrt(1.0 + std::norm(lambda - 1.0) / (nd - 1.0) * geometric);
}

/// Smallest level with n^level >= min_length.
inline std::size_t level_for_length(long n, std::size_t min_length) {
  const auto nn = static_cast<std::size_t>(n);
  std::size_t level = 1;
  std::size_t p = nn;
  while (p < min_length) {
    p *= nn;
    ++level;
  }
  return level;
}

struct disk_scan_row {
  cplx lambda;
  double residual = 0.0;
  double vector_norm = 0.0;
  double closed_form_norm = 0.0;
  double tail_mass = 0.0;
};

struct disk_scan_report {
  std::size_t n = 2;
  std::size_t level = 1;
  std::vector<disk_scan_row> rows;
  double max_residual = 0.0;
  double max_relative_residual = 0.0;
  double max_norm_mismatch = 0.0; ///< |direct norm - closed form| / closed form
  bool all_norms_finite = true;
};

/// Eigenvectors at lambda = r sqrt(n) e^{2 pi i a / angles} for each radius r
/// in [0, 1) and a = 0..angles-1, at the smallest level with n^L >= min_length.
inline disk_scan_report spectral_disk_scan(long n, const std::vector<double> &radii, std::size_t angles_count,
                                           std::size_t min_length = 4096) {
  if (n < 2)
    throw lab_error(errc::index_out_of_range, "spectral scan needs n >= 2, got " + std::to_string(n));
  if (angles_count < 1)
    throw lab_error(errc::index_out_of_range, "angles_count must be >= 1");
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0))
      throw lab_error(errc::outside_spectral_ball, "radius fraction " + std::to_string(r) + " not in [0, 1)");
  }
  disk_scan_report report;
  report.n = static_cast<std::size_t>(n);
  report.level = level_for_length(n, min_length);
  const double big_r = std::sqrt(static_cast<double>(n));
  report.rows.resize(radii.size() * angles_count);
  parallel_for(report.rows.size(), [&](std::size_t idx) {
    const double r = radii[idx / angles_count];
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(idx % angles_count) / static_cast<double>(angles_count);
    const cplx lambda = std::polar(r * big_r, theta);
    const eigen_pair ep = eigenvector_w_star(n, lambda, report.level);
    disk_scan_row &row = report.rows[idx];
    row.lambda = lambda;
    row.residual = ep.residual;
    row.vector_norm = norm(ep.vector);
    row.closed_form_norm = eigenvector_norm_closed_form(n, lambda, report.level);
    row.tail_mass = ep.tail_mass;
  });
  for (const auto &row : report.rows) {
    report.max_residual = std::max(report.max_residual, row.residual);
    report.max_relative_residual = std::max(report.max_relative_residual, row.residual / row.vector_norm);
    report.max_norm_mismatch =
        std::max(report.max_norm_mismatch, std::abs(row.vector_norm - row.closed_form_norm) / row.closed_form_norm);
    report.all_norms_finite = report.all_norms_finite && std::isfinite(row.vector_norm);
  }
  return report;
}

/// d_m = ||(W_n^*)^m f|| / n^{m/2} for m = 1..m_max. Each adjoint step keeps
/// complete blocks only, so f should be valid through n^{m_max} - 1.
inline std::vector<double> shift_decay(long n, const coeff_series &f, std::size_t m_max) {
  if (n < 2)
    throw lab_error(errc::index_out_of_range, "shift decay needs n >= 2, got " + std::to_string(n));
  if (m_max < 1)
    throw lab_error(errc::index_out_of_range, "m_max must be >= 1");
  std::vector<double> out;
  out.reserve(m_max);
  coeff_series g = f;
  double scale = 1.0;
  const double step = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t m = 1; m <= m_max; ++m) {
    g = apply_w_star(n, g);
    scale *= step;
    out.push_back(norm(g) * scale);
  }
  return out;
}

} // namespace hardy
