// hardy_lab: batch front-end for the W_n semigroup experiments.
//
// Exit codes: 0 success, 1 a check failed or a computation raised an error,
// 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/hardy.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path resolve_output(const hardy::lab_config &cfg, const std::string &explicit_path,
                                     const std::string &default_name) {
  std::filesystem::path p = explicit_path.empty() ? std::filesystem::path(cfg.output_dir) / default_name
                                                  : std::filesystem::path(explicit_path);
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path());
  return p;
}

std::ofstream open_output(const std::filesystem::path &p) {
  std::ofstream out(p, std::ios::binary);
  if (!out)
    throw usage_error("cannot open '" + p.string() + "' for writing");
  return out;
}

int cmd_gen_hk(const hardy::lab_config &cfg, long k, std::optional<std::size_t> degree_flag,
               const std::string &out_path) {
  const std::size_t degree = degree_flag.value_or(cfg.truncation_degree);
  const hardy::coeff_series h = hardy::hk_closed_form({k, degree});
  const auto path =
      resolve_output(cfg, out_path, "hk_k" + std::to_string(k) + "_n" + std::to_string(degree) + ".csv");
  auto out = open_output(path);
  out << "# hardy_lab gen-hk k=" << k << " n=" << degree << " generated=" << utc_timestamp() << '\n';
  out << "j,value\n";
  for (std::size_t j = 0; j < h.size(); ++j)
    out << j << ',' << hardy::format_double(h[j].real()) << '\n';
  std::cout << "wrote h_" << k << " coefficients 0.." << degree << " to " << path.string() << '\n';
  std::cout << "h_" << k << "(0) = " << hardy::format_double(h[0].real()) << '\n';
  return exit_ok;
}

int cmd_bd(const hardy::lab_config &cfg, long k_max, std::optional<std::size_t> degree_flag,
           const std::string &out_path, const std::string &json_path) {
  const std::size_t degree = degree_flag.value_or(cfg.truncation_degree);
  const hardy::bd_sequence seq = hardy::baez_duarte_sequence(k_max, degree, cfg.tolerance);
  const auto path =
      resolve_output(cfg, out_path, "bd_kmax" + std::to_string(k_max) + "_n" + std::to_string(degree) + ".csv");
  auto out = open_output(path);
  out << "# hardy_lab bd kmax=" << k_max << " n=" << degree << " generated=" << utc_timestamp() << '\n';
  out << "K,d_K,condition_estimate\n";
  bool monotone = true;
  double previous = INFINITY;
  for (const auto &e : seq.entries) {
    out << e.k_max << ',' << hardy::format_double(e.report.distance) << ','
        << hardy::format_double(e.report.condition_estimate) << '\n';
    monotone = monotone && e.report.distance <= previous + 1e-12;
    previous = e.report.distance;
  }
  if (!json_path.empty()) {
    nlohmann::json j;
    j["degree"] = degree;
    j["k_max"] = k_max;
    j["reports"] = nlohmann::json::array();
    for (const auto &e : seq.entries) {
      auto r = hardy::to_json(e.report);
      r["K"] = e.k_max;
      j["reports"].push_back(std::move(r));
    }
    auto jout = open_output(resolve_output(cfg, json_path, "bd.json"));
    jout << j.dump(2) << '\n';
  }
  const auto h2 = hardy::hk_closed_form({2, degree});
  std::cout << "wrote " << seq.entries.size() << " rows to " << path.string() << '\n';
  std::cout << "d_2 = " << hardy::format_double(seq.entries.front().report.distance)
            << " (one-vector formula " << hardy::format_double(hardy::one_vector_distance_from_one(h2)) << ")\n";
  std::cout << "d_" << k_max << " = " << hardy::format_double(seq.entries.back().report.distance)
            << ", condition " << hardy::format_double(seq.entries.back().report.condition_estimate) << '\n';
  if (!monotone) {
    std::cout << "FAIL: d_K increased with K\n";
    return exit_check_failed;
  }
  return exit_ok;
}

int cmd_verify(const std::string &suite, std::uint64_t seed) {
  const auto results = hardy::run_suite(suite, seed);
  bool ok = true;
  for (const auto &r : results) {
    const char *tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
    std::cout << '[' << tag << "] " << r.suite << ": " << r.name << "  value=" << hardy::format_double(r.max_error);
    if (!r.informational)
      std::cout << " bound=" << hardy::format_double(r.tolerance);
    std::cout << '\n';
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " lines, seed "
            << seed << ")\n";
  return ok ? exit_ok : exit_check_failed;
}

int cmd_spectrum(const hardy::lab_config &cfg, long n, std::size_t r_steps, std::size_t theta_steps,
                 const std::string &out_path) {
  std::vector<double> radii;
  for (std::size_t i = 0; i < r_steps; ++i)
    radii.push_back(static_cast<double>(i) / static_cast<double>(r_steps));
  const auto report = hardy::spectral_disk_scan(n, radii, theta_steps);
  const auto path = resolve_output(cfg, out_path, "spectrum_n" + std::to_string(n) + ".csv");
  auto out = open_output(path);
  out << "# hardy_lab spectrum n=" << n << " level=" << report.level << " generated=" << utc_timestamp() << '\n';
  out << "re_lambda,im_lambda,residual,vector_norm\n";
  for (const auto &row : report.rows) {
    out << hardy::format_double(row.lambda.real()) << ',' << hardy::format_double(row.lambda.imag()) << ','
        << hardy::format_double(row.residual) << ',' << hardy::format_double(row.vector_norm) << '\n';
  }
  std::cout << "wrote " << report.rows.size() << " eigenvectors (degree " << n << "^" << report.level
            << " - 1) to " << path.string() << '\n';
  std::cout << "max residual = " << hardy::format_double(report.max_residual)
            << ", max relative residual = " << hardy::format_double(report.max_relative_residual)
            << ", norm formula mismatch = " << hardy::format_double(report.max_norm_mismatch) << '\n';
  const bool ok = report.all_norms_finite && report.max_relative_residual <= cfg.tolerance;
  if (!ok)
    std::cout << "FAIL: residual above tolerance " << hardy::format_double(cfg.tolerance) << '\n';
  return ok ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Numerical laboratory for the weighted composition semigroup W_n on H^2"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::size_t> truncation_flag;
  std::optional<double> tolerance_flag;
  std::optional<std::string> output_dir_flag;
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--config", config_path, "key = value config file (flags override it)")->check(CLI::ExistingFile);
  app.add_option("--truncation-degree", truncation_flag, "default truncation degree N (default 16384)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", tolerance_flag, "numerical tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  app.add_option("--output-dir", output_dir_flag, "directory for CSV/JSON output (default .)");
  app.add_option("--seed", seed_flag, "seed for randomized sweeps (default 0)");

  long hk_k = 0;
  std::optional<std::size_t> hk_n;
  std::string hk_out;
  auto *gen_hk = app.add_subcommand("gen-hk", "write the Maclaurin coefficients of h_k as CSV (j,value)");
  gen_hk->add_option("--k", hk_k, "index k >= 2")->required()->check(CLI::Range(2L, 1L << 30));
  gen_hk->add_option("--n", hk_n, "truncation degree");
  gen_hk->add_option("--out", hk_out, "output file");

  long bd_kmax = 0;
  std::optional<std::size_t> bd_n;
  std::string bd_out;
  std::string bd_json;
  auto *bd = app.add_subcommand("bd", "distance from 1 to span{h_2..h_K} for K = 2..kmax");
  bd->add_option("--kmax", bd_kmax, "largest K (>= 2)")->required()->check(CLI::Range(2L, 100000L));
  bd->add_option("--n", bd_n, "truncation degree");
  bd->add_option("--out", bd_out, "CSV output file (K,d_K,condition_estimate)");
  bd->add_option("--json", bd_json, "also write full reports as JSON to this file");

  std::string suite = "all";
  auto *verify = app.add_subcommand("verify", "run identity suites and print per-check max errors");
  std::vector<std::string> suite_choices = hardy::suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_choices));

  long sp_n = 0;
  std::size_t r_steps = 10;
  std::size_t theta_steps = 16;
  std::string sp_out;
  auto *spectrum = app.add_subcommand("spectrum", "eigenvectors of W_n* on a polar grid inside |lambda| < sqrt(n)");
  spectrum->add_option("--n", sp_n, "semigroup index n >= 2")->required()->check(CLI::Range(2L, 1L << 20));
  spectrum->add_option("--r-steps", r_steps, "radii i/r_steps, i = 0..r_steps-1 (default 10)")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--theta-steps", theta_steps, "angles per radius (default 16)")->check(CLI::PositiveNumber);
  spectrum->add_option("--out", sp_out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  hardy::lab_config cfg;
  try {
    if (!config_path.empty())
      hardy::load_config(config_path, cfg);
    if (truncation_flag)
      cfg.truncation_degree = *truncation_flag;
    if (tolerance_flag)
      cfg.tolerance = *tolerance_flag;
    if (output_dir_flag)
      cfg.output_dir = *output_dir_flag;
    if (seed_flag)
      cfg.seed = *seed_flag;
    cfg.validate();
  } catch (const std::exception &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*gen_hk)
      return cmd_gen_hk(cfg, hk_k, hk_n, hk_out);
    if (*bd)
      return cmd_bd(cfg, bd_kmax, bd_n, bd_out, bd_json);
    if (*verify)
      return cmd_verify(suite, cfg.seed);
    if (*spectrum)
      return cmd_spectrum(cfg, sp_n, r_steps, theta_steps, sp_out);
  } catch (const usage_error &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const hardy::lab_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_check_failed;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_check_failed;
  }
  return exit_usage;
}
