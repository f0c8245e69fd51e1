// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hardy/hardy.hpp"
#include "test_util.hpp"

using namespace hardy;
using hardy::testing::max_diff;

namespace {

struct outcome {
  bool passed;
  std::string detail;
};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

outcome le(const std::string &what, double value, double bound) {
  return {value <= bound, what + " = " + fmt(value) + " (bound " + fmt(bound) + ")"};
}

outcome all_of(std::vector<outcome> parts) {
  outcome out{true, {}};
  for (auto &p : parts) {
    out.passed = out.passed && p.passed;
    if (!out.detail.empty())
      out.detail += "; ";
    out.detail += (p.passed ? "" : "FAILED ") + p.detail;
  }
  return out;
}

outcome adjoint_duality() {
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (long n : {2L, 3L, 5L, 7L}) {
    for (int trial = 0; trial < 200; ++trial) {
      const coeff_series g = random_series(rng, 512);
      const coeff_series wg = apply_w_star(n, g);
      const coeff_series f = random_series(rng, wg.valid_degree()); // W_n f then fits inside g's window
      worst = std::max(worst, std::abs(inner(apply_w(n, f), g) - inner(f, wg)) / (norm(f) * norm(g)));
    }
  }
  return le("max |<W_n f,g> - <f,W_n* g>| / (||f|| ||g||)", worst, 1e-10);
}

outcome isometry() {
  std::mt19937_64 rng(1002);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const long n = 1 + trial % 10;
    const coeff_series f = random_series(rng, 512);
    const double expected = std::sqrt(static_cast<double>(n)) * norm(f);
    worst = std::max(worst, std::abs(norm(apply_w(n, f)) - expected) / expected);
  }
  return le("max relative error of ||W_n f|| vs sqrt(n) ||f||", worst, 1e-12);
}

outcome semigroup_law() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const coeff_series f = random_series(rng, 256);
    const coeff_series w6 = apply_w(6, f);
    worst = std::max(worst, max_diff(apply_w(2, apply_w(3, f)), w6));
    worst = std::max(worst, max_diff(apply_w(3, apply_w(2, f)), w6));
  }
  return le("max coefficient gap W_2 W_3 / W_3 W_2 vs W_6", worst, 1e-14);
}

outcome adjoint_product() {
  std::mt19937_64 rng(1004);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const coeff_series f = random_series(rng, 300);
    for (long n = 1; n <= 10; ++n)
      worst = std::max(worst, max_diff(apply_w_star(n, apply_w(n, f)), scale(static_cast<double>(n), f)) / norm(f));
  }
  return le("max |W_n* W_n f - n f| / ||f||", worst, 1e-13);
}

outcome semiconjugacy() {
  std::mt19937_64 rng(1005);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const coeff_series f = random_series(rng, 200);
    for (long n : {2L, 3L, 5L})
      worst = std::max(worst, semiconjugacy_residual(n, f) / norm(f));
  }
  return le("max ||T_n(I-S)f - (I-S)W_n f|| / ||f||", worst, 1e-12);
}

outcome hk_mutual_oracle() {
  double worst = 0.0;
  for (long k : {2L, 3L, 5L, 10L, 30L})
    worst = std::max(worst, max_diff(hk_closed_form({k, 4096}), hk_oracle({k, 4096})));
  return le("max |closed form - formal-log pipeline| through degree 4096", worst, 1e-12);
}

outcome hk_functional_equation() {
  const auto table = harmonic_numbers(1 << 13);
  double worst = 0.0;
  for (long n : {2L, 3L}) {
    for (long k : {2L, 3L, 5L}) {
      const coeff_series lhs = apply_w(n, hk_closed_form(k, 1024, table));
      const std::size_t top = lhs.valid_degree();
      worst = std::max(worst, max_diff(lhs, hk_closed_form(n * k, top, table) - hk_closed_form(n, top, table)));
    }
  }
  return le("max |W_n h_k - (h_nk - h_n)|", worst, 1e-12);
}

outcome kernel_facts() {
  double annihilated = 0.0;
  double orthogonal = 0.0;
  for (long n = 2; n <= 8; ++n) {
    for (std::size_t k = 0; k < 25; ++k) {
      const coeff_series fk = kernel_vector(n, k, 300);
      annihilated = std::max(annihilated, norm(apply_w_star(n, fk)));
      for (std::size_t l = 0; l < k; ++l)
        orthogonal = std::max(orthogonal, std::abs(inner(fk, kernel_vector(n, l, 300))));
    }
  }
  double intersection = 0.0;
  for (long j = 1; j <= 10; ++j) {
    const coeff_series v = kernel_intersection_basis(j, 400).back(); // 1 - z^j
    for (long n = j + 1; n <= 50; ++n)
      intersection = std::max(intersection, norm(apply_w_star(n, v)));
  }
  const double witness = norm(apply_w_star(2, kernel_intersection_basis(2).back()));
  return all_of({le("max ||W_n* f_k||", annihilated, 0.0), le("max |<f_j, f_k>|", orthogonal, 0.0),
                 le("max ||W_n* (1 - z^j)||, n > j", intersection, 0.0),
                 {witness > 0.0, "||W_2* (1 - z^2)|| = " + fmt(witness) + " (must be > 0)"}});
}

outcome dirichlet_bound() {
  std::mt19937_64 rng(1009);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (long n : {2L, 3L, 4L}) {
    const std::size_t top = static_cast<std::size_t>(n) * 21 - 1;
    for (int trial = 0; trial < 50; ++trial) {
      coeff_series f = coeff_series::zero(top);
      for (std::size_t k = 0; k <= 20; ++k)
        f = axpy(cplx{gauss(rng), gauss(rng)}, kernel_vector(n, k, top), f);
      const double bound = std::pow(2.0, static_cast<double>(n)) * static_cast<double>(n) * norm(f) * norm(f);
      worst = std::max(worst, dirichlet_energy_at_one(f) / bound);
    }
  }
  const double d_line = dirichlet_energy_at_one(coeff_series::polynomial({1.0, -1.0}, 16));
  const double d_one = dirichlet_energy_at_one(coeff_series::constant(1.0, 16));
  return all_of({le("max D_1(f) / (2^n n ||f||^2)", worst, 1.0), le("|D_1(1 - z) - 1|", std::abs(d_line - 1.0), 0.0),
                 le("D_1(1)", d_one, 0.0)});
}

outcome eigenvector_residual() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (long n : {2L, 3L}) {
    const std::size_t level = level_for_length(n, 4096);
    for (int trial = 0; trial < 100; ++trial) {
      const double radius = 0.95 * std::sqrt(static_cast<double>(n)) * std::sqrt(u(rng));
      const eigen_pair ep = eigenvector_w_star(n, std::polar(radius, 2.0 * std::numbers::pi * u(rng)), level);
      worst = std::max(worst, ep.residual / norm(ep.vector));
    }
  }
  const eigen_pair constant = eigenvector_w_star(2, 1.0, 12);
  const eigen_pair line = eigenvector_w_star(2, 0.0, 1);
  return all_of({le("max residual / ||v||", worst, 1e-10),
                 {constant.vector == coeff_series::constant(1.0, 4095) && constant.residual == 0.0,
                  "lambda = 1 gives the constant 1"},
                 {line.vector == coeff_series::polynomial({1.0, -1.0}) && line.residual == 0.0,
                  "lambda = 0, n = 2 gives 1 - z"}});
}

outcome shift_decay_of_one() {
  const auto d = shift_decay(2, coeff_series::constant(1.0, 1023), 10);
  double worst = 0.0;
  for (std::size_t m = 1; m <= 10; ++m)
    worst = std::max(worst, std::abs(d[m - 1] - std::pow(2.0, -0.5 * static_cast<double>(m))));
  return le("max |d_m - 2^{-m/2}|, m <= 10", worst, 1e-14);
}

outcome baez_duarte() {
  const std::size_t fine_n = 1 << 14;
  const std::size_t coarse_n = 1 << 13;
  const bd_sequence fine = baez_duarte_sequence(50, fine_n);
  const bd_sequence coarse = baez_duarte_sequence(50, coarse_n);
  double min_d = INFINITY;
  double max_increase = -INFINITY;
  double worst_excess = -INFINITY; // |d(2^14) - d(2^13)| - bound
  for (std::size_t i = 0; i < fine.entries.size(); ++i) {
    const double d = fine.entries[i].report.distance;
    min_d = std::min(min_d, d);
    if (i > 0)
      max_increase = std::max(max_increase, d - fine.entries[i - 1].report.distance);
    const double bound = bd_truncation_bound(coarse.entries[i].report.coefficients, coarse_n, fine_n);
    worst_excess = std::max(worst_excess, std::abs(d - coarse.entries[i].report.distance) - bound);
  }
  const double formula = one_vector_distance_from_one(hk_closed_form({2, fine_n}));
  const double d2_gap = std::abs(fine.entries.front().report.distance - formula);
  return all_of({{min_d > 0.0 && min_d > 1e-8, "min d_K = " + fmt(min_d) + " (must be > 0)"},
                 le("max d_{K+1} - d_K", max_increase, 0.0), le("|d_2 - one-vector formula|", d2_gap, 1e-10),
                 le("max (|d_K(2^14) - d_K(2^13)| - tail bound)", worst_excess, 0.0),
                 {true, "d_50 = " + fmt(fine.entries.back().report.distance)}});
}

outcome m_subspace() {
  const double worst = m_subspace_orthogonality(20, 64);
  const double single =
      std::abs(inner(hk_closed_form({2, 64}), coeff_series::polynomial({1.0, -1.0}, 64)));
  return all_of({le("max |<h_k - h_l, 1 - z>|, 2 <= k < l <= 20", worst, 1e-12),
                 le("| |<h_2, 1 - z>| - 1 |", std::abs(single - 1.0), 1e-12)});
}

outcome cyclicity() {
  const std::size_t n = 256;
  const coeff_series p = cyclic_polynomial(1, 2.0, n); // z - 2
  const coeff_series one = coeff_series::constant(1.0, n);
  const double d8 = cyclicity_scan(p, 8, {one}, n).front().distance;
  const double d64 = cyclicity_scan(p, 64, {one}, n).front().distance;

  std::mt19937_64 rng(1014);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const coeff_series g = random_series(rng, 64);
    std::vector<cplx> c(g.coeffs().begin(), g.coeffs().end());
    c[1] = c[0];
    const coeff_series f(c);
    worst = std::max(worst, non_cyclicity_witness(f, 100) / norm(f));
  }
  return all_of({{d64 < d8, "dist(1, span W_n(z-2)): n<=64 " + fmt(d64) + " < n<=8 " + fmt(d8)},
                 le("max_n<=100 |<W_n f, 1 - z>| / ||f|| for f(0) = f(1)", worst, 1e-13)});
}

outcome no_eigenvector_gap() {
  std::mt19937_64 rng(1015);
  double min_ratio = INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const coeff_series f = random_series(rng, 64);
    const coeff_series wf = apply_w(2, f);
    const double nf = norm(f);
    const double gap = norm(wf) * norm(wf) * nf * nf - std::norm(inner(wf, f));
    min_ratio = std::min(min_ratio, gap / (nf * nf * nf * nf));
  }
  return {min_ratio > 1e-12, "min gap / ||f||^4 = " + fmt(min_ratio) + " (must be > 1e-12)"};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
      {"adjoint duality", adjoint_duality},
      {"isometry", isometry},
      {"semigroup law", semigroup_law},
      {"W_n* W_n = n I", adjoint_product},
      {"semiconjugacy", semiconjugacy},
      {"h_k mutual oracle", hk_mutual_oracle},
      {"functional equation", hk_functional_equation},
      {"kernel facts", kernel_facts},
      {"Dirichlet bound", dirichlet_bound},
      {"eigenvector residual", eigenvector_residual},
      {"shift decay", shift_decay_of_one},
      {"Baez-Duarte sequence", baez_duarte},
      {"M-subspace orthogonality", m_subspace},
      {"cyclicity", cyclicity},
      {"no-eigenvector gap", no_eigenvector_gap},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += o.passed ? 0 : 1;
    std::printf("[%s] %2zu %-26s %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size(), seconds);
  return failures == 0 ? 0 : 1;
}
