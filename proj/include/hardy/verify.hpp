#pragma once

// Randomized identity suites behind `hardy_lab verify`. Each check reports
// the largest error it saw against a fixed tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/rh_lab.hpp"
#include "hardy/semigroup.hpp"
#include "hardy/series.hpp"
#include "hardy/special_functions.hpp"
#include "hardy/spectral.hpp"

namespace hardy {

struct check_result {
  std::string suite;
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  bool informational = false; ///< recorded, never fails the run
};

/// Complex coefficients with real and imaginary parts uniform in [-1, 1].
inline coeff_series random_series(std::mt19937_64 &rng, std::size_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto &x : c)
    x = {u(rng), u(rng)};
  return coeff_series(std::move(c));
}

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"adjoint", "isometry", "semigroup", "semiconjugacy", "hk",
                                              "kernel",  "dirichlet", "spectral", "cyclic"};
  return names;
}

namespace detail {

class check_sink {
public:
  check_sink(std::string suite, std::vector<check_result> &out) : suite_(std::move(suite)), out_(out) {}

  void expect_le(std::string name, double err, double tol) {
    out_.push_back({suite_, std::move(name), err, tol, err <= tol, false});
  }
  void expect_gt(std::string name, double value, double floor) {
    out_.push_back({suite_, std::move(name), value, floor, value > floor, false});
  }
  void note(std::string name, double value) { out_.push_back({suite_, std::move(name), value, 0.0, true, true}); }

private:
  std::string suite_;
  std::vector<check_result> &out_;
};

inline double max_coeff_diff(const coeff_series &a, const coeff_series &b) {
  const std::size_t top = std::min(a.valid_degree(), b.valid_degree());
  double worst = 0.0;
  for (std::size_t j = 0; j <= top; ++j)
    worst = std::max(worst, std::abs(a[j] - b[j]));
  return worst;
}

inline void suite_adjoint(std::mt19937_64 &rng, check_sink &sink) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    for (long n : {2L, 3L, 5L, 7L}) {
      const coeff_series g = random_series(rng, 512);
      const coeff_series wg = apply_w_star(n, g);
      const coeff_series f = random_series(rng, wg.valid_degree());
      const double err = std::abs(inner(apply_w(n, f), g) - inner(f, wg));
      worst = std::max(worst, err / (norm(f) * norm(g)));
    }
  }
  sink.expect_le("<W_n f, g> = <f, W_n* g>", worst, 1e-10);
}

inline void suite_isometry(std::mt19937_64 &rng, check_sink &sink) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const coeff_series f = random_series(rng, 256);
    const long n = 1 + trial % 10;
    const double ratio = norm(apply_w(n, f)) / (std::sqrt(static_cast<double>(n)) * norm(f));
    worst = std::max(worst, std::abs(ratio - 1.0));
  }
  sink.expect_le("||W_n f|| = sqrt(n) ||f||", worst, 1e-12);
}

inline void suite_semigroup(std::mt19937_64 &rng, check_sink &sink) {
  double law = 0.0;
  double adjoint_product = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const coeff_series f = random_series(rng, 128);
    for (long m : {2L, 3L})
      for (long n : {2L, 5L})
        law = std::max(law, max_coeff_diff(apply_w(m, apply_w(n, f)), apply_w(m * n, f)));
    for (long n = 1; n <= 10; ++n) {
      const coeff_series back = apply_w_star(n, apply_w(n, f));
      adjoint_product = std::max(adjoint_product,
                                 max_coeff_diff(back, scale(static_cast<double>(n), f)) / norm(f));
    }
  }
  sink.expect_le("W_m W_n = W_mn", law, 1e-14);
  sink.expect_le("W_n* W_n = n I", adjoint_product, 1e-13);
}

inline void suite_semiconjugacy(std::mt19937_64 &rng, check_sink &sink) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const coeff_series f = random_series(rng, 200);
    for (long n : {2L, 3L, 5L})
      worst = std::max(worst, semiconjugacy_residual(n, f) / norm(f));
  }
  sink.expect_le("T_n (I-S) = (I-S) W_n", worst, 1e-12);
}

inline void suite_hk(check_sink &sink) {
  const std::size_t degree = 4096;
  const auto harmonic = harmonic_numbers(degree);
  double mutual = 0.0;
  double first_diff = 0.0;
  double decay = 0.0;
  for (long k : {2L, 3L, 5L, 10L, 30L}) {
    const coeff_series closed = hk_closed_form(k, degree, harmonic);
    mutual = std::max(mutual, max_coeff_diff(closed, hk_oracle({k, degree})));
    first_diff = std::max(first_diff, std::abs(closed[0] - closed[1] + 1.0));
    for (std::size_t j = 1; j <= degree; ++j)
      decay = std::max(decay, std::abs(closed[j]) * static_cast<double>(j + 1) / static_cast<double>(k));
  }
  double functional = 0.0;
  for (long n : {2L, 3L}) {
    for (long k : {2L, 3L, 5L}) {
      const coeff_series lhs = apply_w(n, hk_closed_form(k, 512, harmonic));
      const std::size_t top = lhs.valid_degree();
      const auto big = harmonic_numbers(top);
      const coeff_series rhs = hk_closed_form(n * k, top, big) - hk_closed_form(n, top, big);
      functional = std::max(functional, max_coeff_diff(lhs, rhs));
    }
  }
  sink.expect_le("closed form vs formal-log oracle", mutual, 1e-12);
  sink.expect_le("W_n h_k = h_nk - h_n", functional, 1e-12);
  sink.expect_le("h_k(0) - h_k(1) = -1", first_diff, 1e-14);
  sink.expect_le("|h_k(j)| (j+1)/k <= 1", decay, 1.0);
}

inline void suite_kernel(check_sink &sink) {
  double annihilated = 0.0;
  double orthogonal = 0.0;
  for (long n = 2; n <= 7; ++n) {
    for (std::size_t k = 0; k < 20; ++k) {
      const coeff_series fk = kernel_vector(n, k);
      annihilated = std::max(annihilated, norm(apply_w_star(n, fk)));
      for (std::size_t l = 0; l < k; ++l)
        orthogonal = std::max(orthogonal, std::abs(inner(fk, kernel_vector(n, l))));
    }
  }
  double intersection = 0.0;
  const long k = 6;
  const auto basis = kernel_intersection_basis(k, 64);
  for (long n = k + 1; n <= 40; ++n)
    for (const auto &v : basis)
      intersection = std::max(intersection, norm(apply_w_star(n, v)));
  const double escape = norm(apply_w_star(2, kernel_intersection_basis(2).back()));
  sink.expect_le("W_n* f_k = 0", annihilated, 0.0);
  sink.expect_le("<f_j, f_k> = 0", orthogonal, 0.0);
  sink.expect_le("W_n* (1 - z^j) = 0 for n > j", intersection, 0.0);
  sink.expect_gt("W_2* (1 - z^2) != 0", escape, 0.5);
}

inline void suite_dirichlet(std::mt19937_64 &rng, check_sink &sink) {
  std::normal_distribution<double> gauss;
  double kernel_ratio = 0.0;
  double sharp_ratio = 0.0;
  for (long n : {2L, 3L, 4L}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t top = static_cast<std::size_t>(n) * 21 - 1;
      coeff_series f = coeff_series::zero(top);
      for (std::size_t k = 0; k <= 20; ++k)
        f = axpy(cplx{gauss(rng), gauss(rng)}, kernel_vector(n, k, top), f);
      const double energy = dirichlet_energy_at_one(f);
      const double nf2 = norm(f) * norm(f);
      kernel_ratio = std::max(kernel_ratio, energy / (std::pow(2.0, static_cast<double>(n)) * n * nf2));
      sharp_ratio = std::max(sharp_ratio, energy / (static_cast<double>(n * n) * nf2));
    }
  }
  const double d_one = dirichlet_energy_at_one(coeff_series::constant(1.0, 8));
  const double d_line = dirichlet_energy_at_one(coeff_series::polynomial({1.0, -1.0}, 8));
  sink.expect_le("D_1(f) / (2^n n ||f||^2) on ker W_n*", kernel_ratio, 1.0);
  sink.note("D_1(f) / (n^2 ||f||^2) on ker W_n* (sharper bound, not asserted)", sharp_ratio);
  sink.expect_le("D_1(1) = 0", d_one, 0.0);
  sink.expect_le("|D_1(1 - z) - 1|", std::abs(d_line - 1.0), 0.0);
}

inline void suite_spectral(std::mt19937_64 &rng, check_sink &sink) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double residual = 0.0;
  double norm_formula = 0.0;
  for (long n : {2L, 3L}) {
    const std::size_t level = level_for_length(n, 4096);
    for (int trial = 0; trial < 50; ++trial) {
      const double r = 0.95 * std::sqrt(static_cast<double>(n)) * std::sqrt(u(rng));
      const cplx lambda = std::polar(r, 2.0 * std::numbers::pi * u(rng));
      const eigen_pair ep = eigenvector_w_star(n, lambda, level);
      const double nv = norm(ep.vector);
      residual = std::max(residual, ep.residual / nv);
      norm_formula =
          std::max(norm_formula, std::abs(nv - eigenvector_norm_closed_form(n, lambda, level)) / nv);
    }
  }
  const auto decay = shift_decay(2, coeff_series::constant(1.0, 1023), 10);
  double decay_err = 0.0;
  for (std::size_t m = 1; m <= decay.size(); ++m)
    decay_err = std::max(decay_err, std::abs(decay[m - 1] - std::pow(2.0, -0.5 * static_cast<double>(m))));
  double monotone = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = shift_decay(3, random_series(rng, 3 * 3 * 3 * 3 * 3 * 3 - 1), 6);
    for (std::size_t m = 1; m < d.size(); ++m)
      monotone = std::max(monotone, d[m] - d[m - 1]);
  }
  sink.expect_le("||W_n* v - lambda v|| / ||v||", residual, 1e-10);
  sink.expect_le("||v|| vs closed form", norm_formula, 1e-12);
  sink.expect_le("||(W_2*)^m 1|| / 2^{m/2} = 2^{-m/2}", decay_err, 1e-14);
  sink.expect_le("d_{m+1} - d_m", monotone, 1e-12);
}

inline void suite_cyclic(std::mt19937_64 &rng, check_sink &sink) {
  const std::size_t degree = 256;
  const coeff_series p = cyclic_polynomial(1, 2.0, degree);
  const coeff_series one = coeff_series::constant(1.0, degree);
  const double d8 = cyclicity_scan(p, 8, {one}, degree).front().distance;
  const double d64 = cyclicity_scan(p, 64, {one}, degree).front().distance;
  sink.expect_gt("dist(1, W-orbit of z-2): n<=8 minus n<=64", d8 - d64, 0.0);

  std::vector<coeff_series> monomials;
  for (std::size_t s = 0; s < 8; ++s)
    monomials.push_back(coeff_series::monomial(s, degree));
  double poly_dist = 0.0;
  for (const auto &rep : cyclicity_scan(one, 9, monomials, degree))
    poly_dist = std::max(poly_dist, rep.distance);
  sink.expect_le("dist(z^s, span W_n 1) for n <= s+1", poly_dist, 1e-10);

  double witness = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const coeff_series g = random_series(rng, 32);
    std::vector<cplx> c(g.coeffs().begin(), g.coeffs().end());
    c[1] = c[0];
    const coeff_series f(std::move(c));
    witness = std::max(witness, non_cyclicity_witness(f, 100) / norm(f));
  }
  sink.expect_le("max_n |<W_n f, 1-z>| / ||f|| when f(0) = f(1)", witness, 1e-13);
}

} // namespace detail

/// Runs one suite ("all" runs every suite in order). Unknown names throw
/// std::invalid_argument.
inline std::vector<check_result> run_suite(std::string_view name, std::uint64_t seed) {
  std::vector<check_result> out;
  const std::vector<std::string> &names = suite_names();
  std::vector<std::string> selected;
  if (name == "all")
    selected = names;
  else if (std::find(names.begin(), names.end(), name) != names.end())
    selected.emplace_back(name);
  else
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");

  for (const auto &s : selected) {
    std::mt19937_64 rng(seed);
    detail::check_sink sink(s, out);
    if (s == "adjoint")
      detail::suite_adjoint(rng, sink);
    else if (s == "isometry")
      detail::suite_isometry(rng, sink);
    else if (s == "semigroup")
      detail::suite_semigroup(rng, sink);
    else if (s == "semiconjugacy")
      detail::suite_semiconjugacy(rng, sink);
    else if (s == "hk")
      detail::suite_hk(sink);
    else if (s == "kernel")
      detail::suite_kernel(sink);
    else if (s == "dirichlet")
      detail::suite_dirichlet(rng, sink);
    else if (s == "spectral")
      detail::suite_spectral(rng, sink);
    else if (s == "cyclic")
      detail::suite_cyclic(rng, sink);
  }
  return out;
}

} // namespace hardy
