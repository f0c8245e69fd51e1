// Prints the first few Baez-Duarte distances and checks two of the identities
// on h_2: W_2 h_2 = h_4 - h_2 and <h_2 - h_3, 1 - z> = 0.

#include <cstdio>

#include "hardy/hardy.hpp"

int main() {
  using namespace hardy;

  const std::size_t degree = 4096;
  const auto seq = baez_duarte_sequence(10, degree);
  for (const auto &e : seq.entries)
    std::printf("d_%-3ld = %.12f   cond = %.3g\n", e.k_max, e.report.distance, e.report.condition_estimate);

  const auto h2 = hk_closed_form({2, degree});
  const auto lhs = apply_w(2, truncate(h2, 1023));
  const auto rhs = hk_closed_form({4, 2047}) - hk_closed_form({2, 2047});
  std::printf("||W_2 h_2 - (h_4 - h_2)|| = %.3g\n", norm(lhs - rhs));

  const auto one_minus_z = coeff_series::polynomial({1.0, -1.0});
  std::printf("<h_2 - h_3, 1 - z> = %.3g\n", std::abs(inner(h2 - hk_closed_form({3, degree}), one_minus_z)));
}
