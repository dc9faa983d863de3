#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "agm/theta.hpp"

namespace agm {

// Finite branch points p_1 < ... < p_{2g+1} of y^2 = prod (x - p_j); the
// remaining branch point is at infinity.
class BranchPoints {
 public:
  explicit BranchPoints(std::vector<double> points);

  int genus() const noexcept { return static_cast<int>(points_.size() - 1) / 2; }
  std::size_t size() const noexcept { return points_.size(); }
  // 1-based, p(1) = p_1.
  double p(int j) const { return points_.at(static_cast<std::size_t>(j - 1)); }
  std::span<const double> points() const noexcept { return points_; }
  double min_gap() const;

  BranchPoints shifted(double s) const;
  BranchPoints scaled(double c) const;

 private:
  std::vector<double> points_;
};

struct PeriodPair {
  int genus = 0;
  Eigen::MatrixXd A;       // real A-periods
  Eigen::MatrixXd B_imag;  // B = i * B_imag
  double det_a = 0.0;
  Eigen::MatrixXd T;       // T(i-1, j-1) = T_i^{(j)}, 2g x g

  double t(int i, int j) const { return T(i - 1, j - 1); }
};

inline constexpr double kDefaultPeriodRelTol = 1e-10;

// T_i^{(j)} = int_{p_i}^{p_{i+1}} x^{j-1} dx / sqrt(prod_{k<=i}(x-p_k) prod_{k>i}(p_k-x)).
double t_integral(int i, int j, const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol);

// A_ij = (-1)^i 2 T_{2i-1}^{(j)},  B_ij = 2i sum_{k=i}^{g} (-1)^k T_{2k}^{(j)}.
PeriodPair period_matrices(const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol);

// tau = B A^{-1}
Tau normalized_tau(const PeriodPair& pp);

}  // namespace agm
