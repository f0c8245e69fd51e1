#pragma once

// Truncated Maclaurin coefficient sequences and their exact-at-truncation
// arithmetic. A coeff_series stores coefficients 0..valid_degree of an
// analytic function on the disk; every coefficient it holds is asserted to
// be exact for the represented function, and nothing past valid_degree is
// known. All operations below document the valid degree of their output.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hardy/error.hpp"

namespace hardy {

using cplx = std::complex<double>;

class coeff_series {
public:
  /// Zero series known exactly through degree 0.
  coeff_series() : coeffs_(1, cplx{}) {}

  /// Takes ownership of coefficients 0..coeffs.size()-1; valid_degree is
  /// coeffs.size() - 1.
  explicit coeff_series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw lab_error(errc::invalid_series, "a series needs at least one coefficient");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (!std::isfinite(coeffs_[j].real()) || !std::isfinite(coeffs_[j].imag()))
        throw lab_error(errc::invalid_series, "non-finite coefficient at index " + std::to_string(j));
    }
  }

  explicit coeff_series(const std::vector<double> &real_coeffs)
      : coeff_series(std::vector<cplx>(real_coeffs.begin(), real_coeffs.end())) {}

  /// A polynomial known exactly through `valid_degree`: the missing
  /// coefficients are genuinely zero, so padding is exact.
  static coeff_series polynomial(std::initializer_list<cplx> coeffs, std::size_t valid_degree) {
    return polynomial(std::vector<cplx>(coeffs), valid_degree);
  }

  static coeff_series polynomial(std::vector<cplx> coeffs, std::size_t valid_degree) {
    if (coeffs.size() > valid_degree + 1) {
      for (std::size_t j = valid_degree + 1; j < coeffs.size(); ++j) {
        if (coeffs[j] != cplx{})
          throw lab_error(errc::invalid_series, "polynomial has nonzero coefficient past valid_degree");
      }
    }
    coeffs.resize(valid_degree + 1, cplx{});
    return coeff_series(std::move(coeffs));
  }

  /// Polynomial whose valid degree is its own length minus one.
  static coeff_series polynomial(std::initializer_list<cplx> coeffs) {
    return coeff_series(std::vector<cplx>(coeffs));
  }

  static coeff_series zero(std::size_t valid_degree) {
    return coeff_series(std::vector<cplx>(valid_degree + 1, cplx{}));
  }

  static coeff_series constant(cplx c, std::size_t valid_degree) {
    std::vector<cplx> v(valid_degree + 1, cplx{});
    v[0] = c;
    return coeff_series(std::move(v));
  }

  static coeff_series monomial(std::size_t degree, std::size_t valid_degree, cplx c = 1.0) {
    if (degree > valid_degree)
      throw lab_error(errc::invalid_series, "monomial degree exceeds valid_degree");
    std::vector<cplx> v(valid_degree + 1, cplx{});
    v[degree] = c;
    return coeff_series(std::move(v));
  }

  std::size_t valid_degree() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  const cplx &operator[](std::size_t j) const { return coeffs_[j]; }

  bool is_real() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const cplx &c) { return c.imag() == 0.0; });
  }

  bool operator==(const coeff_series &) const = default;

private:
  std::vector<cplx> coeffs_;
};

/// Inner product over the shared valid range; the second argument is
/// conjugated.
inline cplx inner(const coeff_series &f, const coeff_series &g) {
  const std::size_t top = std::min(f.valid_degree(), g.valid_degree());
  cplx acc{};
  for (std::size_t j = 0; j <= top; ++j)
    acc += f[j] * std::conj(g[j]);
  return acc;
}

inline double norm(const coeff_series &f) {
  double acc = 0.0;
  for (const cplx &c : f.coeffs())
    acc += std::norm(c);
  return std::sqrt(acc);
}

/// Norm of coefficients 0..top (top clamped to the valid degree).
inline double norm_through(const coeff_series &f, std::size_t top) {
  top = std::min(top, f.valid_degree());
  double acc = 0.0;
  for (std::size_t j = 0; j <= top; ++j)
    acc += std::norm(f[j]);
  return std::sqrt(acc);
}

/// Keeps coefficients 0..degree. Asking for more than is known is an error.
inline coeff_series truncate(const coeff_series &f, std::size_t degree) {
  if (degree > f.valid_degree())
    throw lab_error(errc::truncation_too_short,
                    "cannot truncate to degree " + std::to_string(degree) + " beyond valid degree " +
                        std::to_string(f.valid_degree()));
  auto c = f.coeffs();
  return coeff_series(std::vector<cplx>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(degree) + 1));
}

/// a*f + g, valid through min of the inputs.
inline coeff_series axpy(cplx a, const coeff_series &f, const coeff_series &g) {
  const std::size_t top = std::min(f.valid_degree(), g.valid_degree());
  std::vector<cplx> out(top + 1);
  for (std::size_t j = 0; j <= top; ++j)
    out[j] = a * f[j] + g[j];
  return coeff_series(std::move(out));
}

inline coeff_series scale(cplx a, const coeff_series &f) {
  std::vector<cplx> out(f.coeffs().begin(), f.coeffs().end());
  for (auto &c : out)
    c *= a;
  return coeff_series(std::move(out));
}

inline coeff_series operator+(const coeff_series &f, const coeff_series &g) { return axpy(1.0, f, g); }
inline coeff_series operator-(const coeff_series &f, const coeff_series &g) { return axpy(-1.0, g, f); }

/// Truncated product; coefficient j needs both factors through j, so the
/// result is valid through min of the inputs.
inline coeff_series cauchy_product(const coeff_series &f, const coeff_series &g) {
  const std::size_t top = std::min(f.valid_degree(), g.valid_degree());
  std::vector<cplx> out(top + 1, cplx{});
  for (std::size_t i = 0; i <= top; ++i) {
    if (f[i] == cplx{})
      continue;
    for (std::size_t j = 0; i + j <= top; ++j)
      out[i + j] += f[i] * g[j];
  }
  return coeff_series(std::move(out));
}

/// Highest index holding a nonzero coefficient (0 for the zero series).
inline std::size_t last_nonzero(const coeff_series &f) {
  for (std::size_t j = f.valid_degree(); j > 0; --j) {
    if (f[j] != cplx{})
      return j;
  }
  return 0;
}

/// Logarithm of a series with nonzero constant term, from g' f = f':
///   g(0) = log f(0),  j g(j) f(0) = j f(j) - sum_{i=1}^{j-1} i g(i) f(j-i).
/// Principal branch for the constant term. O(N * deg f).
inline coeff_series formal_log(const coeff_series &f, double zero_threshold = 1e-300) {
  const cplx f0 = f[0];
  if (std::abs(f0) < zero_threshold)
    throw lab_error(errc::near_zero_constant_term, "formal_log needs a nonzero constant term");
  const std::size_t top = f.valid_degree();
  const std::size_t span = last_nonzero(f);
  std::vector<cplx> g(top + 1, cplx{});
  g[0] = std::log(f0);
  for (std::size_t j = 1; j <= top; ++j) {
    cplx acc{};
    const std::size_t lo = (j > span) ? j - span : 1;
    for (std::size_t i = std::max<std::size_t>(lo, 1); i < j; ++i)
      acc += static_cast<double>(i) * g[i] * f[j - i];
    g[j] = (f[j] - acc / static_cast<double>(j)) / f0;
  }
  return coeff_series(std::move(g));
}

/// Exponential of a series, from f' = g' f:
///   f(0) = exp g(0),  j f(j) = sum_{i=1}^{j} i g(i) f(j-i).
inline coeff_series formal_exp(const coeff_series &g) {
  const std::size_t top = g.valid_degree();
  std::vector<cplx> f(top + 1, cplx{});
  f[0] = std::exp(g[0]);
  for (std::size_t j = 1; j <= top; ++j) {
    cplx acc{};
    for (std::size_t i = 1; i <= j; ++i)
      acc += static_cast<double>(i) * g[i] * f[j - i];
    f[j] = acc / static_cast<double>(j);
  }
  return coeff_series(std::move(f));
}

/// Multiplication by 1/(1-z): running partial sums.
inline coeff_series cumsum(const coeff_series &f) {
  std::vector<cplx> out(f.size());
  cplx acc{};
  for (std::size_t j = 0; j < f.size(); ++j) {
    acc += f[j];
    out[j] = acc;
  }
  return coeff_series(std::move(out));
}

/// Unilateral shift S f = z f. Coefficient valid_f + 1 is f(valid_f), so
/// the window grows by one.
inline coeff_series shift_s(const coeff_series &f) {
  std::vector<cplx> out(f.size() + 1, cplx{});
  std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + 1);
  return coeff_series(std::move(out));
}

/// (I - S) f, the inverse of cumsum. Valid through valid_f.
inline coeff_series one_minus_shift(const coeff_series &f) { return axpy(-1.0, shift_s(f), f); }

} // namespace hardy
