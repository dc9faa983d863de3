#pragma once

#include <span>
#include <vector>

#include "agm/hyperelliptic.hpp"

namespace agm {

// l_i(xi) = xi_1 - p_i xi_2 + p_i^2 xi_3 - ... + (-1)^{g-1} p_i^{g-1} xi_g + (-1)^g p_i^g
// for i = 1..2g+1: the hyperplanes dual to the Veronese images of the p_i.
class VeroneseForms {
 public:
  explicit VeroneseForms(const BranchPoints& p);

  int genus() const noexcept { return genus_; }
  int count() const noexcept { return 2 * genus_ + 1; }
  const BranchPoints& points() const noexcept { return points_; }

  // Coefficient of xi_k (k = 1..g) in l_i.
  double coefficient(int i, int k) const;
  double constant(int i) const;
  double evaluate(int i, std::span<const double> xi) const;

  // Sign s_i with s_i l_i >= 0 on Delta: (-1)^{m-1} for i = 2m-1, (-1)^m for i = 2m.
  static int required_sign(int i) noexcept;
  // prod_i s_i l_i(xi), positive in the interior of Delta.
  double sign_adjusted_radicand(std::span<const double> xi) const;

 private:
  int genus_;
  BranchPoints points_;
  std::vector<double> coefficients_;  // count x (g + 1), last column is the constant
};

// xi_k = e_{g+1-k}(x_1, ..., x_g); with this map l_i(xi) = prod_k (x_k - p_i).
std::vector<double> veronese_image(std::span<const double> x);

// s_i l_i(xi) >= 0 for every i; ties at zero count as inside.
bool delta_contains(std::span<const double> xi, const VeroneseForms& forms);

// int_Delta dxi / sqrt(prod s_i l_i), by iterated quadrature (g = 1, 2).
double delta_integral(const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol);

// int_gamma omega_X = 2 int_Delta.
double cy_period(const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol);

// |2^{g-1} cy_period - |det A|| / |det A|
double pushforward_residual(const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol);
double pushforward_residual(const BranchPoints& p, double cy, const PeriodPair& pp);

}  // namespace agm
