#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agm/errors.hpp"

namespace agm {

inline constexpr int kMaxGenus = 16;

// An element I = (i_1, ..., i_g) of F_2^g. Stored as an integer whose most
// significant of the g bits is i_1, so value() enumerates 00..0, 0..01, ...
// in the same order as the bit strings "00", "01", "10", "11".
class BitIndex {
 public:
  BitIndex(int genus, std::uint32_t value);

  static BitIndex zero(int genus) { return BitIndex(genus, 0); }
  // Parses a bit string, leftmost character = i_1.
  static BitIndex parse(std::string_view bits);

  int genus() const noexcept { return genus_; }
  std::uint32_t value() const noexcept { return value_; }
  // i_k for k = 1..g.
  int component(int k) const;
  int weight() const noexcept;
  std::string to_string() const;

  // Group law of F_2^g.
  BitIndex operator^(const BitIndex& other) const;
  bool operator==(const BitIndex&) const = default;

 private:
  int genus_;
  std::uint32_t value_;
};

// All 2^g elements of F_2^g in value() order.
std::vector<BitIndex> all_indices(int genus);

inline std::size_t index_count(int genus) { return std::size_t{1} << genus; }

// 2^g strictly positive reals indexed by F_2^g.
class MeanVector {
 public:
  MeanVector(int genus, std::vector<double> values);

  int genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](const BitIndex& I) const;
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  double min() const;
  double max() const;
  // (max - min) / max
  double relative_spread() const;

  MeanVector scaled(double c) const;
  // (a_{I+J})_I
  MeanVector translated(const BitIndex& J) const;

 private:
  int genus_;
  std::vector<double> values_;
};

// 2^{-g} sum_P u_{I+P} u_P over a flat value array of length 2^g. Shared by
// the AGM (real u) and the theta duplication check (complex u).
template <class T>
T quadratic_form_values(std::uint32_t I, std::span<const T> u) {
  T sum{};
  for (std::uint32_t P = 0; P < u.size(); ++P) sum += u[I ^ P] * u[P];
  return sum / static_cast<double>(u.size());
}

double quadratic_form(const BitIndex& I, const MeanVector& u);

// a_{k+1,I} = F_I(sqrt(a_k)).
MeanVector agm_step(const MeanVector& a);

struct AgmTrace {
  std::vector<MeanVector> iterates;  // iterates[0] is the input
  std::vector<double> spreads;       // relative spread of each iterate
  double limit = 0.0;

  // Number of agm_step applications.
  int iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

inline constexpr double kDefaultAgmRelTol = 1e-13;
inline constexpr int kAgmIterationCap = 64;

// Iterates until the relative spread drops below rel_tol, takes one more
// step, and reports the I = 0 entry. A constant input returns immediately.
AgmTrace agm_limit(const MeanVector& a, double rel_tol = kDefaultAgmRelTol);

// Shorthand for agm_limit(a, rel_tol).limit.
double generalized_agm(const MeanVector& a, double rel_tol = kDefaultAgmRelTol);

}  // namespace agm
