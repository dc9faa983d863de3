#include "agm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "agm/calabi_yau.hpp"
#include "agm/genus2.hpp"
#include "agm/json_io.hpp"
#include "agm/quadrature.hpp"
#include "agm/sampling.hpp"
#include "agm/thomae.hpp"

namespace agm {

using nlohmann::json;

void RunConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) throw InputError("rel_tol must lie in (0, 1e-6]");
  if (!(theta_abs_tol > 0.0 && theta_abs_tol <= 1e-6)) throw InputError("theta_abs_tol must lie in (0, 1e-6]");
  if (!(agm_rel_tol > 0.0 && agm_rel_tol <= 1e-3)) throw InputError("agm_rel_tol must lie in (0, 1e-3]");
  if (genus_cap < 1 || genus_cap > 4) throw InputError("genus cap must lie in [1, 4]");
  if (samples < 1) throw InputError("samples must be positive");
  if (!std::isfinite(perturb) || std::abs(perturb) >= 1.0) throw InputError("perturb must lie in (-1, 1)");
}

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  RunConfig c;
  try {
    c.rel_tol = j.value("rel_tol", c.rel_tol);
    c.theta_abs_tol = j.value("theta_abs_tol", c.theta_abs_tol);
    c.agm_rel_tol = j.value("agm_rel_tol", c.agm_rel_tol);
    c.genus_cap = j.value("genus_cap", c.genus_cap);
    c.samples = j.value("samples", c.samples);
    c.seed = j.value("seed", c.seed);
    c.output = j.value("output", c.output);
    c.timings = j.value("timings", c.timings);
    c.perturb = j.value("perturb", c.perturb);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad config field: ") + e.what());
  }
  c.validate();
  return c;
}

json RunConfig::to_json() const {
  return {{"rel_tol", rel_tol}, {"theta_abs_tol", theta_abs_tol}, {"agm_rel_tol", agm_rel_tol},
          {"genus_cap", genus_cap}, {"samples", samples}, {"seed", seed}, {"perturb", perturb}};
}

json VerificationReport::to_json() const {
  json checks_json = json::array();
  for (const CheckRecord& c : checks) {
    json r = {{"name", c.name},         {"genus", c.genus}, {"inputs", c.inputs},
              {"lhs", c.lhs},           {"rhs", c.rhs},     {"residual", c.residual},
              {"tolerance", c.tolerance}, {"pass", c.pass}};
    if (!c.error.empty()) r["error"] = c.error;
    if (c.seconds) r["seconds"] = *c.seconds;
    checks_json.push_back(std::move(r));
  }
  return {{"summary", {{"total", checks.size()}, {"passed", passed}, {"failed", failed}}},
          {"checks", std::move(checks_json)}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport report;
  for (const json& r : j.at("checks")) {
    CheckRecord c;
    c.name = r.at("name").get<std::string>();
    c.genus = r.at("genus").get<int>();
    c.inputs = r.at("inputs");
    // non-finite values serialize as null
    auto num = [&](const char* key) { return r.at(key).is_null() ? std::nan("") : r.at(key).get<double>(); };
    c.lhs = num("lhs");
    c.rhs = num("rhs");
    c.residual = num("residual");
    c.tolerance = num("tolerance");
    c.pass = r.at("pass").get<bool>();
    if (r.contains("error")) c.error = r.at("error").get<std::string>();
    if (r.contains("seconds")) c.seconds = r.at("seconds").get<double>();
    report.checks.push_back(std::move(c));
  }
  report.passed = j.at("summary").at("passed").get<int>();
  report.failed = j.at("summary").at("failed").get<int>();
  return report;
}

ClassicalIdentity classical_identity(double a0, double a1, double rel_tol) {
  if (!(a0 > a1 && a1 > 0.0)) throw DomainError("classical identity needs a0 > a1 > 0");
  ClassicalIdentity out;
  out.agm_side = a0 / generalized_agm(MeanVector(1, {a0, a1}));
  const double r = a1 / a0;
  // 1 - k^2 x^2 = (1 - x)(1 + x) + r^2 x^2 with k^2 = 1 - r^2; the integrand
  // is even, so the [0, 1] integral is half of the [-1, 1] one.
  auto h = [r](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x) + r * r * x * x); };
  out.integral_side = quad::endpoint_singular(h, -1.0, 1.0, rel_tol) / std::numbers::pi;
  out.residual = std::abs(out.agm_side - out.integral_side) / out.integral_side;
  return out;
}

namespace {

std::string padded(int k) {
  std::string s = std::to_string(k);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

class Runner {
 public:
  explicit Runner(const RunConfig& config) : config_(config) {}

  // body fills lhs/rhs/residual; pass is decided here.
  void check(std::string name, int genus, json inputs, double tolerance,
             const std::function<void(CheckRecord&)>& body) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.genus = genus;
    rec.inputs = std::move(inputs);
    rec.tolerance = tolerance;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(rec);
      rec.pass = rec.residual <= rec.tolerance;
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.error = e.what();
    }
    if (config_.timings)
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    records_.push_back(std::move(rec));
  }

  VerificationReport finish() {
    std::sort(records_.begin(), records_.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    VerificationReport report;
    for (const CheckRecord& r : records_) (r.pass ? report.passed : report.failed)++;
    report.checks = std::move(records_);
    return report;
  }

 private:
  const RunConfig& config_;
  std::vector<CheckRecord> records_;
};

double relative(double lhs, double rhs) { return std::abs(lhs - rhs) / std::abs(rhs); }

void flag(CheckRecord& rec, double lhs, bool ok) {
  rec.lhs = lhs;
  rec.rhs = 0.0;
  rec.residual = ok ? 0.0 : 1.0;
}

void curve_checks(Runner& run, const RunConfig& cfg, const BranchPoints& p, const std::string& tag) {
  const int g = p.genus();
  const json inputs = io::to_json(p);
  std::optional<PeriodPair> pp;
  std::optional<Tau> tau;
  run.check("periods/" + tag, g, inputs, 0.0, [&](CheckRecord& rec) {
    pp = period_matrices(p, cfg.rel_tol);
    tau = normalized_tau(*pp);
    rec.lhs = pp->det_a;
  });
  auto need = [&] {
    if (!pp || !tau) throw Error("skipped", "period computation failed");
  };

  run.check("main_theorem/" + tag, g, inputs, 1e-8, [&](CheckRecord& rec) {
    need();
    MeanVector a = initial_data(p);
    if (cfg.perturb != 0.0) {
      std::vector<double> v(a.values().begin(), a.values().end());
      v[0] *= 1.0 + cfg.perturb;
      a = MeanVector(g, std::move(v));
    }
    rec.lhs = generalized_agm(a, cfg.agm_rel_tol) * std::abs(pp->det_a);
    rec.rhs = std::pow(2.0 * std::numbers::pi, g);
    rec.residual = relative(rec.lhs, rec.rhs);
  });
  run.check("duplication/" + tag, g, inputs, 1e-12, [&](CheckRecord& rec) {
    need();
    rec.residual = duplication_residual(*tau, cfg.theta_abs_tol);
    rec.lhs = rec.residual;
  });
  run.check("thomae/" + tag, g, inputs, 1e-8, [&](CheckRecord& rec) {
    need();
    const ThomaeCheck t = thomae_check(p, *pp, *tau, cfg.theta_abs_tol);
    rec.lhs = t.lhs.front();
    rec.rhs = t.rhs.front();
    rec.residual = t.residual;
  });
  run.check("riemann_symmetry/" + tag, g, inputs, 1e-10, [&](CheckRecord& rec) {
    need();
    rec.residual = rec.lhs = tau->symmetry_defect();
  });
  run.check("riemann_real_part/" + tag, g, inputs, 1e-10, [&](CheckRecord& rec) {
    need();
    rec.residual = rec.lhs = tau->real_part_norm();
  });
  run.check("riemann_positive_definite/" + tag, g, inputs, 0.0, [&](CheckRecord& rec) {
    need();
    flag(rec, tau->min_imag_eigenvalue(), tau->min_imag_eigenvalue() > 0.0);
  });
  run.check("det_sign/" + tag, g, inputs, 0.0, [&](CheckRecord& rec) {
    need();
    const double signed_det = (g * (g + 1) / 2) % 2 == 0 ? pp->det_a : -pp->det_a;
    flag(rec, signed_det, signed_det > 0.0);
  });

  if (g > 2) return;
  std::optional<double> cy;
  const double cy_tol = g == 1 ? 1e-10 : 1e-4;
  run.check("cy_pushforward/" + tag, g, inputs, cy_tol, [&](CheckRecord& rec) {
    need();
    cy = cy_period(p, cfg.rel_tol);
    rec.lhs = std::ldexp(*cy, g - 1);
    rec.rhs = std::abs(pp->det_a);
    rec.residual = relative(rec.lhs, rec.rhs);
  });
  run.check("cy_theorem/" + tag, g, inputs, g == 1 ? 1e-8 : 1e-4, [&](CheckRecord& rec) {
    if (!cy) throw Error("skipped", "Calabi-Yau period failed");
    rec.lhs = generalized_agm(initial_data(p), cfg.agm_rel_tol) * *cy;
    rec.rhs = 2.0 * std::pow(std::numbers::pi, g);
    rec.residual = relative(rec.lhs, rec.rhs);
  });
}

void genus2_checks(Runner& run, const RunConfig& cfg, const Genus2Quadruple& q, const std::string& tag) {
  const json inputs = io::to_json(q);
  run.check("genus2_ordering/" + tag, 2, inputs, 0.0, [&](CheckRecord& rec) {
    const Genus2Moduli m = moduli_from_means(q);
    const bool moduli_ok = 0.0 < m.l2 && m.l2 < m.l1 && m.l1 < 1.0;
    bool points_ok = true;
    try {
      branch_points_from_means(q);
    } catch (const OrderingError&) {
      points_ok = false;
    }
    flag(rec, m.l1 - m.l2, moduli_ok && points_ok);
  });
  run.check("genus2_ratio/" + tag, 2, inputs, 1e-11, [&](CheckRecord& rec) {
    rec.residual = rec.lhs = ratio_residual(q, branch_points_from_means(q));
  });
  std::optional<Genus2Limit> limit;
  run.check("genus2_closed_forms/" + tag, 2, inputs, 1e-12, [&](CheckRecord& rec) {
    limit = closed_form_limit(q, cfg.rel_tol);
    rec.lhs = limit->det_form;
    rec.rhs = limit->expanded_form;
    rec.residual = relative(rec.lhs, rec.rhs);
  });
  run.check("genus2_vs_agm/" + tag, 2, inputs, 1e-8, [&](CheckRecord& rec) {
    if (!limit) throw Error("skipped", "closed form failed");
    rec.lhs = limit->det_form;
    rec.rhs = generalized_agm(q.to_means(), cfg.agm_rel_tol);
    rec.residual = relative(rec.lhs, rec.rhs);
  });
  run.check("genus2_roundtrip/" + tag, 2, inputs, 1e-12, [&](CheckRecord& rec) {
    const MeanVector thomae = initial_data(branch_points_from_means(q));
    const MeanVector a = q.to_means();
    const double factor = thomae[0] / a[0];
    double worst = 0.0;
    for (std::size_t I = 1; I < 4; ++I) worst = std::max(worst, relative(thomae[I] / a[I], factor));
    rec.lhs = factor;
    rec.residual = worst;
  });
}

}  // namespace

VerificationReport verify_all(const RunConfig& config) {
  config.validate();
  Runner run(config);
  Sampler sampler(config.seed);

  for (int g = 1; g <= config.genus_cap; ++g) {
    for (int k = 0; k < config.samples; ++k) {
      const std::string tag = "g" + std::to_string(g) + "/" + padded(k);
      curve_checks(run, config, sampler.branch_points(g), tag);
    }
  }
  if (config.genus_cap >= 2)
    for (int k = 0; k < config.samples; ++k) genus2_checks(run, config, sampler.quadruple(), padded(k));

  for (int k = 0; k < config.samples; ++k) {
    const double a0 = sampler.uniform(1.0, 10.0);
    const double a1 = a0 * sampler.uniform(0.05, 0.95);
    run.check("classical_identity/" + padded(k), 1, json{{"a0", a0}, {"a1", a1}}, 1e-10, [&](CheckRecord& rec) {
      const ClassicalIdentity c = classical_identity(a0, a1);
      rec.lhs = c.agm_side;
      rec.rhs = c.integral_side;
      rec.residual = c.residual;
    });
  }
  return run.finish();
}

}  // namespace agm
