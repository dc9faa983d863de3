#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace agm {

struct RunConfig {
  double rel_tol = 1e-10;
  double theta_abs_tol = 1e-14;
  double agm_rel_tol = 1e-13;
  int genus_cap = 3;
  int samples = 5;
  std::uint64_t seed = 7;
  std::string output;
  bool timings = false;
  // Relative perturbation of a_0 in the main-theorem checks; nonzero values
  // serve as a negative control.
  double perturb = 0.0;

  void validate() const;
  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CheckRecord {
  std::string name;
  int genus = 0;
  nlohmann::json inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;                 // set when the check threw
  std::optional<double> seconds;     // only with RunConfig::timings
};

struct VerificationReport {
  std::vector<CheckRecord> checks;  // sorted by name
  int passed = 0;
  int failed = 0;

  bool all_pass() const { return failed == 0 && !checks.empty(); }
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

// Runs every identity check over seeded random inputs. A failing or
// throwing check is recorded and the run continues.
VerificationReport verify_all(const RunConfig& config);

// a0 / mu_1(a0, a1) against (2/pi) int_0^1 dx / sqrt((1-x^2)(1-k^2 x^2)).
struct ClassicalIdentity {
  double agm_side = 0.0;
  double integral_side = 0.0;
  double residual = 0.0;
};
ClassicalIdentity classical_identity(double a0, double a1, double rel_tol = 1e-12);

}  // namespace agm
