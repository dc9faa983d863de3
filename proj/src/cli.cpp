#include "agm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "agm/calabi_yau.hpp"
#include "agm/genus2.hpp"
#include "agm/json_io.hpp"
#include "agm/thomae.hpp"
#include "agm/verify.hpp"

namespace agm::cli {

namespace {

using json = nlohmann::json;

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

struct Options {
  std::string input;
  std::string config_path;
  double rel_tol = 1e-10;
  double theta_abs_tol = 1e-14;
  double agm_rel_tol = 1e-13;
  bool trace = false;
  bool verify = false;
  bool duplication = false;
  // verify-all
  int genus = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string output;
  bool timings = false;
  double perturb = 0.0;
};

// Tolerances from --config, overridden by explicit flags.
RunConfig base_config(const Options& opt, const CLI::App& sub) {
  RunConfig cfg;
  if (!opt.config_path.empty()) {
    std::ifstream file(opt.config_path);
    if (!file) throw InputError("cannot open config file '" + opt.config_path + "'");
    try {
      cfg = RunConfig::from_json(json::parse(file));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed config: ") + e.what());
    }
  }
  if (sub.count("--rel-tol")) cfg.rel_tol = opt.rel_tol;
  if (sub.count("--theta-abs-tol")) cfg.theta_abs_tol = opt.theta_abs_tol;
  if (sub.count("--agm-rel-tol")) cfg.agm_rel_tol = opt.agm_rel_tol;
  cfg.validate();
  return cfg;
}

int cmd_agm(const Options& opt, const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const MeanVector a = io::mean_vector_from_json(read_json(opt.input, in));
  emit(out, io::to_json(agm_limit(a, cfg.agm_rel_tol), opt.trace));
  return kExitOk;
}

int cmd_theta(const Options& opt, const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Tau tau = io::tau_from_json(read_json(opt.input, in));
  json result = io::to_json(theta_vector(tau, cfg.theta_abs_tol));
  result["truncation_radius"] = theta_truncation_radius(tau.genus(), tau.min_imag_eigenvalue(), cfg.theta_abs_tol);
  if (opt.duplication) result["duplication_residual"] = duplication_residual(tau, cfg.theta_abs_tol);
  emit(out, result);
  return kExitOk;
}

int cmd_periods(const Options& opt, const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const BranchPoints p = io::branch_points_from_json(read_json(opt.input, in));
  const PeriodPair pp = period_matrices(p, cfg.rel_tol);
  const Tau tau = normalized_tau(pp);
  json result = io::to_json(pp);
  result["points"] = io::to_json(p)["points"];
  result["tau_imag"] = io::matrix_to_json(tau.entries().imag());
  emit(out, result);
  return kExitOk;
}

int cmd_thomae_init(const Options& opt, const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const BranchPoints p = io::branch_points_from_json(read_json(opt.input, in));
  json result = io::to_json(initial_data(p));
  if (!opt.verify) {
    emit(out, result);
    return kExitOk;
  }
  const ThomaeCheck check = thomae_check(p, cfg.rel_tol, cfg.theta_abs_tol);
  constexpr double kTolerance = 1e-8;
  result["verify"] = {{"lhs", check.lhs},
                      {"rhs", check.rhs},
                      {"thomae_residual", check.residual},
                      {"tolerance", kTolerance},
                      {"pass", check.residual <= kTolerance}};
  emit(out, result);
  return check.residual <= kTolerance ? kExitOk : kExitVerificationFailed;
}

int cmd_cy_period(const Options& opt, const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const BranchPoints p = io::branch_points_from_json(read_json(opt.input, in));
  const int g = p.genus();
  const double cy = cy_period(p, cfg.rel_tol);
  const PeriodPair pp = period_matrices(p, cfg.rel_tol);
  const double mu = generalized_agm(initial_data(p), cfg.agm_rel_tol);
  const double theorem_rhs = 2.0 * std::pow(std::numbers::pi, g);
  const double push = pushforward_residual(p, cy, pp);
  const double theorem = std::abs(mu * cy - theorem_rhs) / theorem_rhs;
  const double tolerance = g == 1 ? 1e-10 : 1e-4;
  emit(out, {{"genus", g},
             {"cy_period", cy},
             {"abs_det_a", std::abs(pp.det_a)},
             {"mu", mu},
             {"pushforward_residual", push},
             {"theorem_residual", theorem},
             {"tolerance", tolerance}});
  return push <= tolerance ? kExitOk : kExitVerificationFailed;
}

int cmd_genus2(const Options& opt, const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Genus2Quadruple q = io::quadruple_from_json(read_json(opt.input, in));
  const Genus2Moduli m = moduli_from_means(q);
  const BranchPoints p = branch_points_from_means(q);
  const Genus2Limit limit = closed_form_limit(q, cfg.rel_tol);
  const double mu = generalized_agm(q.to_means(), cfg.agm_rel_tol);
  const double ratio = ratio_residual(q, p);
  const double forms = std::abs(limit.det_form - limit.expanded_form) / limit.expanded_form;
  const double vs_agm = std::abs(limit.det_form - mu) / mu;
  const bool pass = ratio < 1e-11 && forms < 1e-12 && vs_agm < 1e-8;
  emit(out, {{"means", io::to_json(q)},
             {"moduli", io::to_json(m)},
             {"branch_points", io::to_json(p)["points"]},
             {"abs_det_a", limit.abs_det_a},
             {"mu2_iterated", mu},
             {"mu2_closed_form", limit.det_form},
             {"mu2_closed_form_expanded", limit.expanded_form},
             {"residuals", {{"ratio_relation", ratio}, {"closed_forms", forms}, {"closed_form_vs_agm", vs_agm}}},
             {"pass", pass}});
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_all(const Options& opt, RunConfig cfg, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (sub.count("--genus")) cfg.genus_cap = opt.genus;
  if (sub.count("--seed")) cfg.seed = opt.seed;
  if (sub.count("--samples")) cfg.samples = opt.samples;
  if (sub.count("--output")) cfg.output = opt.output;
  if (sub.count("--timings")) cfg.timings = opt.timings;
  if (sub.count("--perturb")) cfg.perturb = opt.perturb;
  cfg.validate();

  const VerificationReport report = verify_all(cfg);
  const json j = report.to_json();
  std::string path = cfg.output;
  if (path.empty()) {
    if (const char* dir = std::getenv("AGM_OUTPUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / "verify-report.json").string();
  }
  if (!path.empty()) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot write report to '" + path + "'");
    file << j.dump(2) << '\n';
  }
  emit(out, j);
  err << "verify-all: " << report.passed << " passed, " << report.failed << " failed\n";
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized arithmetic-geometric means and their period integrals", "agm"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool reads_input) {
    if (reads_input) sub->add_option("-i,--input", opt.input, "JSON input file (default: standard input)");
    sub->add_option("--config", opt.config_path, "RunConfig JSON file");
    sub->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
    sub->add_option("--theta-abs-tol", opt.theta_abs_tol, "theta truncation tolerance");
    sub->add_option("--agm-rel-tol", opt.agm_rel_tol, "AGM stopping tolerance");
  };

  auto* agm_cmd = app.add_subcommand("agm", "generalized AGM limit of a mean vector");
  add_common(agm_cmd, true);
  agm_cmd->add_flag("--trace", opt.trace, "include all iterates");

  auto* theta_cmd = app.add_subcommand("theta", "theta constants of a period matrix");
  add_common(theta_cmd, true);
  theta_cmd->add_flag("--duplication", opt.duplication, "also report the 2-tau duplication residual");

  auto* periods_cmd = app.add_subcommand("periods", "period matrices of y^2 = prod (x - p_j)");
  add_common(periods_cmd, true);

  auto* thomae_cmd = app.add_subcommand("thomae-init", "initial means from branch points");
  add_common(thomae_cmd, true);
  thomae_cmd->add_flag("--verify", opt.verify, "check Thomae's formula numerically");

  auto* cy_cmd = app.add_subcommand("cy-period", "Calabi-Yau period and pushforward identity");
  add_common(cy_cmd, true);

  auto* g2_cmd = app.add_subcommand("genus2", "explicit genus-2 parametrization of a quadruple");
  add_common(g2_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify-all", "run every identity check on seeded random inputs");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--genus", opt.genus, "largest genus to check")->check(CLI::Range(1, 4));
  verify_cmd->add_option("--seed", opt.seed, "random seed");
  verify_cmd->add_option("--samples", opt.samples, "random inputs per family")->check(CLI::PositiveNumber);
  verify_cmd->add_option("-o,--output", opt.output, "also write the report to this file");
  verify_cmd->add_flag("--timings", opt.timings, "record wall-clock time per check");
  verify_cmd->add_option("--perturb", opt.perturb, "relative perturbation of a_0 (negative control)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kExitInputError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const RunConfig cfg = base_config(opt, *sub);
    const std::string name = sub->get_name();
    if (name == "agm") return cmd_agm(opt, cfg, in, out);
    if (name == "theta") return cmd_theta(opt, cfg, in, out);
    if (name == "periods") return cmd_periods(opt, cfg, in, out);
    if (name == "thomae-init") return cmd_thomae_init(opt, cfg, in, out);
    if (name == "cy-period") return cmd_cy_period(opt, cfg, in, out);
    if (name == "genus2") return cmd_genus2(opt, cfg, in, out);
    return cmd_verify_all(opt, cfg, *sub, out, err);
  } catch (const Error& e) {
    emit_error(err, e.code(), e.what());
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "input", e.what());
    return kExitInputError;
  }
}

}  // namespace agm::cli
