#pragma once

// Least-squares distance from a target series to the span of a finite basis,
// by Householder QR on the coefficient matrix. One factorization answers
// every prefix of the basis at once: after all reflectors are applied to the
// target, the distance to span{b_0..b_{K-1}} is the norm of rows K.. of the
// transformed target, and the optimal coefficients come from the leading
// K x K block of R.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/SVD>

#include "hardy/error.hpp"
#include "hardy/series.hpp"

namespace hardy {

struct span_problem {
  coeff_series target;
  std::vector<coeff_series> basis;
  std::size_t degree = 0; ///< common truncation N; rows 0..N enter the system
};

struct distance_report {
  double distance = 0.0;
  std::vector<cplx> coefficients;
  double residual_norm_check = 0.0; ///< ||target - sum c_i b_i|| by direct series arithmetic
  double condition_estimate = 1.0;  ///< sigma_max / sigma_min of the basis matrix
};

/// Re-truncates target and basis to `degree`; every input must be known at
/// least that far.
inline span_problem make_span_problem(const coeff_series &target, const std::vector<coeff_series> &basis,
                                      std::size_t degree) {
  if (basis.empty())
    throw lab_error(errc::degenerate_basis, "basis is empty");
  span_problem p;
  p.degree = degree;
  p.target = truncate(target, degree);
  p.basis.reserve(basis.size());
  for (const auto &b : basis)
    p.basis.push_back(truncate(b, degree));
  return p;
}

namespace detail {

template <typename Scalar> double abs2(const Scalar &x) {
  if constexpr (std::is_same_v<Scalar, double>)
    return x * x;
  else
    return std::norm(x);
}

template <typename Scalar> Scalar conj_of(const Scalar &x) {
  if constexpr (std::is_same_v<Scalar, double>)
    return x;
  else
    return std::conj(x);
}

template <typename Scalar> Scalar from_cplx(const cplx &c) {
  if constexpr (std::is_same_v<Scalar, double>)
    return c.real();
  else
    return c;
}

template <typename Scalar> Scalar phase_of(const Scalar &x) {
  const double a = std::sqrt(abs2(x));
  if (a == 0.0)
    return Scalar{1.0};
  return x / a;
}

} // namespace detail

/// Householder QR of a tall column set. Columns are (rows)-long; reflector j
/// acts on rows j.. only.
template <typename Scalar> class householder_qr {
public:
  householder_qr(const std::vector<std::vector<Scalar>> &columns, double rank_tolerance)
      : rows_(columns.empty() ? 0 : columns.front().size()), cols_(columns.size()),
        r_(cols_ * cols_, Scalar{}) {
    if (cols_ == 0)
      throw lab_error(errc::degenerate_basis, "basis is empty");
    if (cols_ > rows_)
      throw lab_error(errc::degenerate_basis, "more basis vectors (" + std::to_string(cols_) +
                                                  ") than coefficients (" + std::to_string(rows_) + ")");
    reflectors_.reserve(cols_);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::vector<Scalar> col = columns[k];
      double original = 0.0;
      for (const auto &x : col)
        original += detail::abs2(x);
      original = std::sqrt(original);
      for (std::size_t j = 0; j < k; ++j)
        reflect(j, col);

      double rest = 0.0;
      for (std::size_t i = k; i < rows_; ++i)
        rest += detail::abs2(col[i]);
      rest = std::sqrt(rest);
      if (original == 0.0 || rest <= rank_tolerance * original)
        throw lab_error(errc::degenerate_basis, "basis vector " + std::to_string(k) +
                                                    " lies within the span of its predecessors (relative "
                                                    "residual " +
                                                    std::to_string(original == 0.0 ? 0.0 : rest / original) + ")");

      const Scalar alpha = -detail::phase_of(col[k]) * rest;
      std::vector<Scalar> v(col.begin() + static_cast<std::ptrdiff_t>(k), col.end());
      v[0] -= alpha;
      double vv = 0.0;
      for (const auto &x : v)
        vv += detail::abs2(x);
      reflectors_.push_back({std::move(v), vv});
      for (std::size_t i = 0; i < k; ++i)
        r(i, k) = col[i];
      r(k, k) = alpha;
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Q^H b.
  std::vector<Scalar> transform(std::vector<Scalar> b) const {
    for (std::size_t j = 0; j < cols_; ++j)
      reflect(j, b);
    return b;
  }

  /// Distance from b to span of the first `prefix` columns, given Q^H b.
  double prefix_distance(const std::vector<Scalar> &qb, std::size_t prefix) const {
    double acc = 0.0;
    for (std::size_t i = prefix; i < rows_; ++i)
      acc += detail::abs2(qb[i]);
    return std::sqrt(acc);
  }

  /// Solves R[0:p,0:p] c = qb[0:p].
  std::vector<Scalar> prefix_coefficients(const std::vector<Scalar> &qb, std::size_t prefix) const {
    std::vector<Scalar> c(prefix);
    for (std::size_t i = prefix; i-- > 0;) {
      Scalar acc = qb[i];
      for (std::size_t j = i + 1; j < prefix; ++j)
        acc -= r(i, j) * c[j];
      c[i] = acc / r(i, i);
    }
    return c;
  }

  /// Ratio of extreme singular values of the first `prefix` columns.
  double prefix_condition(std::size_t prefix) const {
    using mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    mat block = mat::Zero(static_cast<Eigen::Index>(prefix), static_cast<Eigen::Index>(prefix));
    for (std::size_t i = 0; i < prefix; ++i)
      for (std::size_t j = i; j < prefix; ++j)
        block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r(i, j);
    Eigen::JacobiSVD<mat> svd(block);
    const auto &s = svd.singularValues();
    return s(0) / s(s.size() - 1);
  }

private:
  struct reflector {
    std::vector<Scalar> v; // acts on rows offset..offset+v.size()-1
    double vv;
  };

  Scalar &r(std::size_t i, std::size_t j) { return r_[i * cols_ + j]; }
  const Scalar &r(std::size_t i, std::size_t j) const { return r_[i * cols_ + j]; }

  void reflect(std::size_t j, std::vector<Scalar> &y) const {
    const reflector &h = reflectors_[j];
    if (h.vv == 0.0)
      return;
    Scalar dot{};
    for (std::size_t i = 0; i < h.v.size(); ++i)
      dot += detail::conj_of(h.v[i]) * y[j + i];
    const Scalar s = dot * (2.0 / h.vv);
    for (std::size_t i = 0; i < h.v.size(); ++i)
      y[j + i] -= s * h.v[i];
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> r_;
  std::vector<reflector> reflectors_;
};

/// ||target - sum c_i basis_i|| evaluated with series arithmetic, independent
/// of the factorization.
inline double recompute_residual(const span_problem &p, const std::vector<cplx> &coefficients) {
  coeff_series residual = p.target;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    residual = axpy(-coefficients[i], p.basis[i], residual);
  return norm(residual);
}

/// sum c_i basis_i.
inline coeff_series projection_of(const span_problem &p, const std::vector<cplx> &coefficients) {
  coeff_series out = coeff_series::zero(p.degree);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out = axpy(coefficients[i], p.basis[i], out);
  return out;
}

namespace detail {

template <typename Scalar> std::vector<Scalar> column_of(const coeff_series &f) {
  std::vector<Scalar> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out[j] = from_cplx<Scalar>(f[j]);
  return out;
}

template <typename Scalar>
householder_qr<Scalar> factor_basis(const std::vector<coeff_series> &basis, double rank_tolerance) {
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(basis.size());
  for (const auto &b : basis)
    cols.push_back(column_of<Scalar>(b));
  return householder_qr<Scalar>(cols, rank_tolerance);
}

template <typename Scalar>
distance_report prefix_report(const span_problem &p, const householder_qr<Scalar> &qr, const std::vector<Scalar> &qb,
                              std::size_t prefix) {
  distance_report rep;
  rep.distance = qr.prefix_distance(qb, prefix);
  const auto c = qr.prefix_coefficients(qb, prefix);
  rep.coefficients.assign(c.begin(), c.end());
  rep.residual_norm_check = recompute_residual(p, rep.coefficients);
  rep.condition_estimate = qr.prefix_condition(prefix);
  return rep;
}

inline bool all_real(const span_problem &p) {
  return p.target.is_real() &&
         std::all_of(p.basis.begin(), p.basis.end(), [](const coeff_series &b) { return b.is_real(); });
}

template <typename Scalar>
std::vector<distance_report> all_prefixes(const span_problem &p, std::size_t first_prefix, double rank_tolerance) {
  const auto qr = factor_basis<Scalar>(p.basis, rank_tolerance);
  const auto qb = qr.transform(column_of<Scalar>(p.target));
  std::vector<distance_report> out;
  for (std::size_t k = first_prefix; k <= p.basis.size(); ++k)
    out.push_back(prefix_report(p, qr, qb, k));
  return out;
}

} // namespace detail

/// min_c ||target - sum c_i basis_i|| over coefficients 0..N. Uses a real
/// factorization when every input is real.
inline distance_report distance_to_span(const span_problem &p, double rank_tolerance = 1e-10) {
  if (p.basis.empty())
    throw lab_error(errc::degenerate_basis, "basis is empty");
  const std::size_t k = p.basis.size();
  if (detail::all_real(p))
    return detail::all_prefixes<double>(p, k, rank_tolerance).front();
  return detail::all_prefixes<cplx>(p, k, rank_tolerance).front();
}

/// Reports for every prefix span{b_0..b_{K-1}}, K = 1..basis.size(), from a
/// single factorization.
inline std::vector<distance_report> distance_to_prefixes(const span_problem &p, double rank_tolerance = 1e-10) {
  if (p.basis.empty())
    throw lab_error(errc::degenerate_basis, "basis is empty");
  if (detail::all_real(p))
    return detail::all_prefixes<double>(p, 1, rank_tolerance);
  return detail::all_prefixes<cplx>(p, 1, rank_tolerance);
}

/// Several targets against one basis, factoring once.
inline std::vector<distance_report> distance_to_span_many(const std::vector<coeff_series> &targets,
                                                          const std::vector<coeff_series> &basis, std::size_t degree,
                                                          double rank_tolerance = 1e-10) {
  if (targets.empty())
    return {};
  std::vector<span_problem> problems;
  problems.reserve(targets.size());
  for (const auto &t : targets)
    problems.push_back(make_span_problem(t, basis, degree));
  const bool real = std::all_of(problems.begin(), problems.end(), detail::all_real);
  std::vector<distance_report> out;
  auto run = [&]<typename Scalar>(Scalar) {
    const auto qr = detail::factor_basis<Scalar>(problems.front().basis, rank_tolerance);
    for (const auto &p : problems) {
      const auto qb = qr.transform(detail::column_of<Scalar>(p.target));
      out.push_back(detail::prefix_report(p, qr, qb, basis.size()));
    }
  };
  if (real)
    run(0.0);
  else
    run(cplx{});
  return out;
}

} // namespace hardy
