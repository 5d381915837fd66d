#include "commands.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "aekahler/curvature.hpp"
#include "aekahler/errors.hpp"
#include "aekahler/families.hpp"
#include "aekahler/format.hpp"
#include "aekahler/kernels.hpp"
#include "aekahler/mass.hpp"
#include "aekahler/monge_ampere.hpp"

namespace aek::cli {
namespace {

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

ProfilePtr resolve_profile(const RunConfig& cfg) {
  if (!cfg.profile.empty()) {
    if (!cfg.family.empty()) throw UsageError("give either --family or --profile, not both");
    return load_profile_file(cfg.profile);
  }
  if (cfg.family.empty()) throw UsageError("one of --family or --profile is required");
  if (cfg.family == "euclidean") return euclidean_profile();
  return make_profile({parse_family(cfg.family), cfg.lambda, std::nullopt});
}

Execution execution(const RunConfig& cfg) {
  return cfg.serial ? Execution::serial : Execution::parallel;
}

Theorem11Spec theorem11_spec(const RunConfig& cfg) {
  Theorem11Spec spec = default_theorem11_spec();
  spec.execution = execution(cfg);
  return spec;
}

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

// Flat key,value CSV for single-record outputs.
void write_record_csv(std::ostream& out, const nlohmann::json& j) {
  std::string header, row;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() || value.is_object()) continue;
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    if (value.is_number_float()) {
      row += fmt17(value.get<double>());
    } else if (value.is_string()) {
      row += value.get<std::string>();
    } else {
      row += value.dump();
    }
  }
  out << header << '\n' << row << '\n';
}

void emit(std::ostream& out, const nlohmann::json& j, Format fmt) {
  if (fmt == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    write_record_csv(out, j);
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid '" + text + "': expected lo:hi:N or lo:hi:Nlog");
  const double lo = parse_number(parts[0], "grid lower end");
  const double hi = parse_number(parts[1], "grid upper end");
  std::string count = parts[2];
  bool logarithmic = false;
  if (count.size() > 3 && count.compare(count.size() - 3, 3, "log") == 0) {
    logarithmic = true;
    count.resize(count.size() - 3);
  }
  const double n = parse_number(count, "grid size");
  if (n < 1 || n != std::floor(n) || n > 1e7) throw UsageError("grid size must be a positive integer");
  if (!(lo >= 0.0) || !(hi >= lo)) throw UsageError("grid needs 0 <= lo <= hi");
  const int k = static_cast<int>(n);
  if (k == 1) return {lo};
  if (logarithmic) {
    if (!(lo > 0.0)) throw UsageError("log grid needs lo > 0");
    return log_points(lo, hi, k);
  }
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(lo + (hi - lo) * i / (k - 1));
  out.back() = hi;
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    const double v = parse_number(item, "list entry");
    if (!(v > 0.0)) throw UsageError("list entries must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

void cmd_curvature(const RunConfig& cfg, std::ostream& out) {
  const ProfilePtr profile = resolve_profile(cfg);
  const auto rows = curvature_grid(*profile, parse_grid(cfg.r_grid), execution(cfg));
  if (format_or(cfg, Format::csv) == Format::csv) {
    write_curvature_csv(out, rows);
    return;
  }
  nlohmann::json j = {{"schema", "1"}, {"label", profile->label()}};
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : rows) {
    arr.push_back({{"r", c.r},
                   {"ricci_eig_1", c.ricci_eigs[0]},
                   {"ricci_eig_2", c.ricci_eigs[1]},
                   {"scalar", c.scalar}});
  }
  j["rows"] = arr;
  out << j.dump(2) << '\n';
}

void cmd_mass(const RunConfig& cfg, std::ostream& out) {
  const ProfilePtr profile = resolve_profile(cfg);
  const MassReport rep = mass_inequality_report(*profile, theorem11_spec(cfg));
  emit(out, rep.to_json(), format_or(cfg, Format::json));
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.profile.empty()) throw UsageError("sweep works on families, not profile files");
  if (cfg.family.empty()) throw UsageError("sweep needs --family");
  const auto rows = family_sweep(parse_family(cfg.family), parse_list(cfg.lambdas),
                                 execution(cfg), default_theorem11_spec());
  if (format_or(cfg, Format::csv) == Format::csv) {
    write_sweep_csv(out, rows);
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"family", family_name(r.spec.kind)},
                   {"lambda", r.spec.lambda},
                   {"mass", r.mass.to_json()},
                   {"ricci_inf", r.ricci.inf_eig},
                   {"ricci_argmin_r", r.ricci.argmin_r},
                   {"tau", r.decay.tau},
                   {"length01", r.length01},
                   {"theorem_4_1_applicable", r.theorem_4_1_applicable},
                   {"theorem_4_4_applicable", r.theorem_4_4_applicable}});
  }
  out << nlohmann::json{{"schema", "1"}, {"rows", arr}}.dump(2) << '\n';
}

void cmd_ma_solve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.density.empty()) throw UsageError("ma-solve needs --density");
  VolumeDensity density = load_density_file(cfg.density);
  if (cfg.lambda_given) density.params["lambda"] = cfg.lambda;
  const ProfilePtr profile = solve_potential(density, "monge-ampere");
  const std::vector<double> grid = log_points(1e-4, 1e4, 81);
  const double residual = verify_volume(*profile, density, grid);
  nlohmann::json j = {{"schema", "1"},
                      {"profile", profile->to_json()},
                      {"residual", residual},
                      {"grid", {{"lo", grid.front()}, {"hi", grid.back()}, {"n", grid.size()}}}};
  emit(out, j, format_or(cfg, Format::json));
}

void cmd_verify_inequality(const RunConfig& cfg, std::ostream& out) {
  const ProfilePtr profile = resolve_profile(cfg);
  const Theorem11Spec spec = theorem11_spec(cfg);
  const double lhs = mass_scalar_integral(*profile);
  const double rhs = theorem11_rhs(*profile, spec);
  nlohmann::json j = {{"schema", "1"},
                      {"label", profile->label()},
                      {"lambda", profile->param("lambda")},
                      {"mass_scalar_integral", lhs},
                      {"rhs_theorem11", rhs},
                      {"slack", lhs - rhs},
                      {"holds", lhs - rhs >= -1e-6}};
  emit(out, j, format_or(cfg, Format::json));
}

void cmd_decay(const RunConfig& cfg, std::ostream& out) {
  const ProfilePtr profile = resolve_profile(cfg);
  const DecayEstimate d = estimate_decay(*profile);
  nlohmann::json j = {{"schema", "1"},
                      {"label", profile->label()},
                      {"lambda", profile->param("lambda")},
                      {"b", d.b},
                      {"tau", d.tau},
                      {"residual", d.residual},
                      {"slopes", d.slopes}};
  emit(out, j, format_or(cfg, Format::json));
}

}  // namespace aek::cli
