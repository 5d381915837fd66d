#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace aek::cli {

enum class Format { csv, json };

struct RunConfig {
  std::string family;   // empty when a profile file is given
  std::string profile;  // path to profile JSON
  std::string density;  // path to density JSON (ma-solve)
  double lambda = 1.0;
  bool lambda_given = false;
  std::string r_grid = "0.01:100:50log";
  std::string lambdas = "1,0.1,0.01,0.001";
  std::optional<Format> format;
  std::string out;
  std::optional<double> rtol;
  std::optional<double> atol;
  bool serial = false;
};

/// "lo:hi:N" (linear) or "lo:hi:Nlog".  Throws UsageError.
std::vector<double> parse_grid(const std::string& text);
/// Comma-separated positive numbers.  Throws UsageError.
std::vector<double> parse_list(const std::string& text);

void cmd_curvature(const RunConfig& cfg, std::ostream& out);
void cmd_mass(const RunConfig& cfg, std::ostream& out);
void cmd_sweep(const RunConfig& cfg, std::ostream& out);
void cmd_ma_solve(const RunConfig& cfg, std::ostream& out);
void cmd_verify_inequality(const RunConfig& cfg, std::ostream& out);
void cmd_decay(const RunConfig& cfg, std::ostream& out);

}  // namespace aek::cli
