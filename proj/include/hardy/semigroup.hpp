#pragma once

// The weighted composition semigroup W_n f(z) = (1 + z + ... + z^{n-1}) f(z^n),
// its adjoint, the plain composition semigroup T_n f(z) = f(z^n), and the
// kernel vectors of W_n^*, all as transforms on coefficient windows.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/series.hpp"

namespace hardy {

/// Semigroup index n >= 1.
class operator_index {
public:
  operator_index(long n) : n_(n) { // NOLINT(google-explicit-constructor)
    if (n < 1)
      throw lab_error(errc::index_out_of_range, "semigroup index must be >= 1, got " + std::to_string(n));
  }

  std::size_t value() const noexcept { return static_cast<std::size_t>(n_); }

private:
  long n_;
};

/// Output coefficient j is f(floor(j/n)); valid through n*valid_f + n - 1.
inline coeff_series apply_w(operator_index index, const coeff_series &f) {
  const std::size_t n = index.value();
  if (n == 1)
    return f;
  std::vector<cplx> out(n * f.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = f[j / n];
  return coeff_series(std::move(out));
}

/// Output coefficient k is the block sum f(nk) + ... + f(nk + n - 1). Only
/// complete blocks are kept: valid through floor((valid_f + 1)/n) - 1.
inline coeff_series apply_w_star(operator_index index, const coeff_series &f) {
  const std::size_t n = index.value();
  if (n == 1)
    return f;
  const std::size_t blocks = f.size() / n;
  if (blocks == 0)
    throw lab_error(errc::truncation_too_short,
                    "W*_" + std::to_string(n) + " needs valid degree >= " + std::to_string(n - 1) + ", got " +
                        std::to_string(f.valid_degree()));
  std::vector<cplx> out(blocks, cplx{});
  for (std::size_t k = 0; k < blocks; ++k) {
    cplx acc{};
    for (std::size_t r = 0; r < n; ++r)
      acc += f[n * k + r];
    out[k] = acc;
  }
  return coeff_series(std::move(out));
}

/// f(z^n): coefficient nk is f(k), the rest vanish. Valid through n*valid_f.
inline coeff_series apply_t(operator_index index, const coeff_series &f) {
  const std::size_t n = index.value();
  if (n == 1)
    return f;
  std::vector<cplx> out(n * f.valid_degree() + 1, cplx{});
  for (std::size_t k = 0; k < f.size(); ++k)
    out[n * k] = f[k];
  return coeff_series(std::move(out));
}

/// || T_n (I - S) f - (I - S) W_n f || over the shared window. The two
/// sides agree as operators, so this is a numerical identity check.
inline double semiconjugacy_residual(operator_index n, const coeff_series &f) {
  const coeff_series lhs = apply_t(n, one_minus_shift(f));
  const coeff_series rhs = one_minus_shift(apply_w(n, f));
  return norm(lhs - rhs);
}

/// f_k = z^{nk} + ... + z^{nk+n-2} - (n-1) z^{nk+n-1}, an element of ker W_n^*.
/// `valid_degree` pads with exact zeros; it defaults to nk + n - 1.
inline coeff_series kernel_vector(long n, std::size_t k, std::size_t valid_degree = 0) {
  if (n < 2)
    throw lab_error(errc::index_out_of_range, "kernel vectors need n >= 2, got " + std::to_string(n));
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t top = nn * k + nn - 1;
  std::vector<cplx> c(top + 1, cplx{});
  for (std::size_t r = 0; r + 1 < nn; ++r)
    c[nn * k + r] = 1.0;
  c[top] = -static_cast<double>(nn - 1);
  return coeff_series::polynomial(std::move(c), std::max(top, valid_degree));
}

/// [1 - z, 1 - z^2, ..., 1 - z^k], which spans the intersection of
/// ker W_n^* over n > k. Each member is padded to `valid_degree` (at least k).
inline std::vector<coeff_series> kernel_intersection_basis(long k, std::size_t valid_degree = 0) {
  if (k < 1)
    throw lab_error(errc::index_out_of_range, "kernel intersection needs k >= 1, got " + std::to_string(k));
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t top = std::max(kk, valid_degree);
  std::vector<coeff_series> basis;
  basis.reserve(kk);
  for (std::size_t j = 1; j <= kk; ++j) {
    std::vector<cplx> c(j + 1, cplx{});
    c[0] = 1.0;
    c[j] = -1.0;
    basis.push_back(coeff_series::polynomial(std::move(c), top));
  }
  return basis;
}

} // namespace hardy
