#pragma once

// Textual forms of series and reports. Doubles are written with 17
// significant digits in the C locale so a write/read cycle is lossless.

#include <charconv>
#include <complex>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "hardy/error.hpp"
#include "hardy/projection.hpp"
#include "hardy/series.hpp"

namespace hardy {

inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string &text) {
  double x = 0.0;
  const char *first = text.data();
  const char *last = first + text.size();
  while (first < last && *first == ' ')
    ++first;
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc{} || res.ptr == first)
    throw lab_error(errc::invalid_series, "cannot parse number '" + text + "'");
  return x;
}

/// {"valid_degree": N, "re": [...], "im": [...]}
inline nlohmann::json to_json(const coeff_series &f) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const cplx &c : f.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return {{"valid_degree", f.valid_degree()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline coeff_series series_from_json(const nlohmann::json &j) {
  try {
    const auto degree = j.at("valid_degree").get<std::size_t>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != degree + 1 || im.size() != degree + 1)
      throw lab_error(errc::invalid_series, "coefficient arrays must have valid_degree + 1 entries");
    std::vector<cplx> c(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i)
      c[i] = {re[i], im[i]};
    return coeff_series(std::move(c));
  } catch (const nlohmann::json::exception &e) {
    throw lab_error(errc::invalid_series, e.what());
  }
}

inline nlohmann::json to_json(const distance_report &r) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const cplx &c : r.coefficients) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return {{"distance", r.distance},
          {"coefficients", {{"re", std::move(re)}, {"im", std::move(im)}}},
          {"residual_norm_check", r.residual_norm_check},
          {"condition_estimate", r.condition_estimate}};
}

/// Rows "index,re,im" after a header line.
inline void write_series_csv(std::ostream &os, const coeff_series &f) {
  os << "index,re,im\n";
  for (std::size_t j = 0; j < f.size(); ++j)
    os << j << ',' << format_double(f[j].real()) << ',' << format_double(f[j].imag()) << '\n';
}

/// Reads what write_series_csv writes. Indices must run 0, 1, 2, ... with no
/// gaps; lines starting with '#' are skipped.
inline coeff_series read_series_csv(std::istream &is) {
  std::string line;
  std::vector<cplx> c;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("index", 0) == 0)
        continue;
    }
    std::stringstream ss(line);
    std::string idx, re, im;
    if (!std::getline(ss, idx, ',') || !std::getline(ss, re, ',') || !std::getline(ss, im))
      throw lab_error(errc::invalid_series, "malformed CSV row '" + line + "'");
    if (static_cast<std::size_t>(parse_double(idx)) != c.size())
      throw lab_error(errc::invalid_series, "CSV indices must be consecutive from 0");
    c.emplace_back(parse_double(re), parse_double(im));
  }
  if (c.empty())
    throw lab_error(errc::invalid_series, "CSV holds no coefficients");
  return coeff_series(std::move(c));
}

} // namespace hardy
