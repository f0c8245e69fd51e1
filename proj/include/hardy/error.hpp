#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

enum class errc {
  index_out_of_range,
  truncation_too_short,
  near_zero_constant_term,
  outside_spectral_ball,
  degenerate_basis,
  hypothesis_violated,
  invalid_series,
};

inline const char *to_string(errc code) noexcept {
  switch (code) {
  case errc::index_out_of_range: return "IndexOutOfRange";
  case errc::truncation_too_short: return "TruncationTooShort";
  case errc::near_zero_constant_term: return "NearZeroConstantTerm";
  case errc::outside_spectral_ball: return "OutsideSpectralBall";
  case errc::degenerate_basis: return "DegenerateBasis";
  case errc::hypothesis_violated: return "HypothesisViolated";
  case errc::invalid_series: return "InvalidSeries";
  }
  return "Unknown";
}

/// Every precondition failure in the library surfaces as a lab_error
/// carrying one of the codes above.
class lab_error : public std::runtime_error {
public:
  lab_error(errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace hardy
