#include "agm/agm_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace agm {

namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus)
    throw DimensionError("genus must lie in [1, " + std::to_string(kMaxGenus) +
                         "], got " + std::to_string(genus));
}

}  // namespace

BitIndex::BitIndex(int genus, std::uint32_t value) : genus_(genus), value_(value) {
  check_genus(genus);
  if (value >= (std::uint32_t{1} << genus))
    throw DimensionError("bit index " + std::to_string(value) + " out of range for genus " +
                         std::to_string(genus));
}

BitIndex BitIndex::parse(std::string_view bits) {
  const int g = static_cast<int>(bits.size());
  check_genus(g);
  std::uint32_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InputError("invalid bit string '" + std::string(bits) + "'");
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitIndex(g, v);
}

int BitIndex::component(int k) const {
  if (k < 1 || k > genus_) throw DimensionError("bit component out of range");
  return static_cast<int>((value_ >> (genus_ - k)) & 1u);
}

int BitIndex::weight() const noexcept { return std::popcount(value_); }

std::string BitIndex::to_string() const {
  std::string s(static_cast<std::size_t>(genus_), '0');
  for (int k = 1; k <= genus_; ++k)
    if (component(k)) s[static_cast<std::size_t>(k - 1)] = '1';
  return s;
}

BitIndex BitIndex::operator^(const BitIndex& other) const {
  if (other.genus_ != genus_) throw DimensionError("XOR of bit indices with different genus");
  return BitIndex(genus_, value_ ^ other.value_);
}

std::vector<BitIndex> all_indices(int genus) {
  check_genus(genus);
  std::vector<BitIndex> out;
  out.reserve(index_count(genus));
  for (std::uint32_t v = 0; v < index_count(genus); ++v) out.emplace_back(genus, v);
  return out;
}

MeanVector::MeanVector(int genus, std::vector<double> values)
    : genus_(genus), values_(std::move(values)) {
  check_genus(genus);
  if (values_.size() != index_count(genus))
    throw DimensionError("mean vector of genus " + std::to_string(genus) + " needs " +
                         std::to_string(index_count(genus)) + " entries, got " +
                         std::to_string(values_.size()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i]))
      throw DomainError("mean vector entry " + BitIndex(genus, static_cast<std::uint32_t>(i)).to_string() +
                        " must be finite and strictly positive");
  }
}

double MeanVector::operator[](const BitIndex& I) const {
  if (I.genus() != genus_) throw DimensionError("bit index genus does not match mean vector");
  return values_[I.value()];
}

double MeanVector::min() const { return *std::min_element(values_.begin(), values_.end()); }
double MeanVector::max() const { return *std::max_element(values_.begin(), values_.end()); }

double MeanVector::relative_spread() const {
  const double hi = max();
  return (hi - min()) / hi;
}

MeanVector MeanVector::scaled(double c) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return MeanVector(genus_, std::move(v));
}

MeanVector MeanVector::translated(const BitIndex& J) const {
  if (J.genus() != genus_) throw DimensionError("translation genus does not match mean vector");
  std::vector<double> v(values_.size());
  for (std::uint32_t I = 0; I < v.size(); ++I) v[I] = values_[I ^ J.value()];
  return MeanVector(genus_, std::move(v));
}

double quadratic_form(const BitIndex& I, const MeanVector& u) {
  if (I.genus() != u.genus())
    throw DimensionError("quadratic form index has genus " + std::to_string(I.genus()) +
                         ", vector has genus " + std::to_string(u.genus()));
  return quadratic_form_values(I.value(), u.values());
}

MeanVector agm_step(const MeanVector& a) {
  std::vector<double> root(a.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = std::sqrt(a[i]);
  const std::span<const double> u(root);
  std::vector<double> next(a.size());
  for (std::uint32_t I = 0; I < next.size(); ++I) next[I] = quadratic_form_values(I, u);
  return MeanVector(a.genus(), std::move(next));
}

AgmTrace agm_limit(const MeanVector& a, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
    throw DomainError("agm rel_tol must lie in (0, 1e-3]");

  AgmTrace trace;
  trace.iterates.push_back(a);
  trace.spreads.push_back(a.relative_spread());

  auto advance = [&trace] {
    if (trace.iterations() >= kAgmIterationCap)
      throw ConvergenceError("AGM did not converge within " + std::to_string(kAgmIterationCap) +
                             " iterations (last spread " + std::to_string(trace.spreads.back()) + ")");
    trace.iterates.push_back(agm_step(trace.iterates.back()));
    trace.spreads.push_back(trace.iterates.back().relative_spread());
  };

  while (!(trace.spreads.back() < rel_tol)) advance();
  if (trace.spreads.back() > 0.0) advance();

  trace.limit = trace.iterates.back()[0];
  return trace;
}

double generalized_agm(const MeanVector& a, double rel_tol) { return agm_limit(a, rel_tol).limit; }

}  // namespace agm
