#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

namespace hardy {

struct lab_config {
  std::size_t truncation_degree = 16384;
  double tolerance = 1e-10;
  std::string output_dir = ".";
  std::uint64_t seed = 0;

  void validate() const {
    if (truncation_degree < 1)
      throw std::invalid_argument("truncation_degree must be >= 1");
    if (!(tolerance > 0.0))
      throw std::invalid_argument("tolerance must be > 0");
  }
};

namespace detail {

inline std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace detail

/// Reads `key = value` lines into cfg. Blank lines and '#' comments are
/// ignored; string values may be double-quoted. Unknown keys are an error.
inline void load_config(const std::string &path, lab_config &cfg) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open config file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    try {
      if (key == "truncation_degree")
        cfg.truncation_degree = std::stoull(value);
      else if (key == "tolerance")
        cfg.tolerance = std::stod(value);
      else if (key == "output_dir")
        cfg.output_dir = value;
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else
        throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::logic_error &e) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  cfg.validate();
}

} // namespace hardy
