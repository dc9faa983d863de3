#include "agm/json_io.hpp"

#include <cmath>

namespace agm::io {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("expected a number for ") + what);
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const MeanVector& a) {
  json values = json::object();
  for (const BitIndex& I : all_indices(a.genus())) values[I.to_string()] = a[I];
  return {{"genus", a.genus()}, {"values", std::move(values)}};
}

MeanVector mean_vector_from_json(const json& j) {
  const json& g_json = field(j, "genus");
  if (!g_json.is_number_integer()) throw InputError("genus must be an integer");
  const int g = g_json.get<int>();
  if (g < 1 || g > kMaxGenus) throw InputError("genus out of range");
  const json& values = field(j, "values");
  if (!values.is_object()) throw InputError("values must be an object keyed by bit strings");
  std::vector<double> v(index_count(g), 0.0);
  std::vector<bool> seen(v.size(), false);
  for (const auto& [key, x] : values.items()) {
    if (static_cast<int>(key.size()) != g) throw InputError("key '" + key + "' does not have genus length");
    const BitIndex I = BitIndex::parse(key);
    if (seen[I.value()]) throw InputError("duplicate key '" + key + "'");
    seen[I.value()] = true;
    v[I.value()] = number(x, "mean value");
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("missing key '" + BitIndex(g, static_cast<std::uint32_t>(i)).to_string() + "'");
  return MeanVector(g, std::move(v));
}

json to_json(const AgmTrace& trace, bool with_iterates) {
  json out = {{"limit", trace.limit}, {"iterations", trace.iterations()}, {"spreads", trace.spreads}};
  if (with_iterates) {
    json iterates = json::array();
    for (const MeanVector& a : trace.iterates) iterates.push_back(to_json(a));
    out["iterates"] = std::move(iterates);
  }
  return out;
}

json to_json(const Tau& tau) {
  json pairs = json::array();
  const auto& m = tau.entries();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) pairs.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"genus", tau.genus()}, {"tau", std::move(pairs)}};
}

Tau tau_from_json(const json& j) {
  const json& pairs = field(j, "tau");
  if (!pairs.is_array() || pairs.empty()) throw InputError("tau must be a non-empty array of [re, im] pairs");
  const auto count = pairs.size();
  const auto g = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
  if (static_cast<std::size_t>(g * g) != count) throw InputError("tau must hold g*g entries");
  if (j.contains("genus") && j.at("genus") != g) throw InputError("tau entry count does not match genus");
  Eigen::MatrixXcd m(g, g);
  for (Eigen::Index k = 0; k < g * g; ++k) {
    const json& e = pairs.at(static_cast<std::size_t>(k));
    if (!e.is_array() || e.size() != 2) throw InputError("tau entries must be [re, im] pairs");
    m(k / g, k % g) = {number(e[0], "tau real part"), number(e[1], "tau imaginary part")};
  }
  return Tau(std::move(m));
}

json to_json(const ThetaVector& theta) {
  json values = json::object();
  for (const BitIndex& I : all_indices(theta.genus)) values[I.to_string()] = {theta[I].real(), theta[I].imag()};
  return {{"genus", theta.genus}, {"values", std::move(values)}};
}

json to_json(const BranchPoints& p) {
  return {{"points", std::vector<double>(p.points().begin(), p.points().end())}};
}

BranchPoints branch_points_from_json(const json& j) {
  const json& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("points must be an array");
  std::vector<double> v;
  for (const json& x : pts) v.push_back(number(x, "branch point"));
  return BranchPoints(std::move(v));
}

json to_json(const PeriodPair& pp) {
  return {{"genus", pp.genus},
          {"T", matrix_to_json(pp.T)},
          {"A", matrix_to_json(pp.A)},
          {"B_imag", matrix_to_json(pp.B_imag)},
          {"det_a", pp.det_a}};
}

Genus2Quadruple quadruple_from_json(const json& j) {
  if (j.is_object() && j.contains("values")) return Genus2Quadruple::from_means(mean_vector_from_json(j));
  return {number(field(j, "a00"), "a00"), number(field(j, "a01"), "a01"), number(field(j, "a10"), "a10"),
          number(field(j, "a11"), "a11")};
}

json to_json(const Genus2Quadruple& a) { return {{"a00", a.a00}, {"a01", a.a01}, {"a10", a.a10}, {"a11", a.a11}}; }

json to_json(const Genus2Moduli& m) { return {{"k1", m.k1}, {"k2", m.k2}, {"l1", m.l1}, {"l2", m.l2}}; }

}  // namespace agm::io
