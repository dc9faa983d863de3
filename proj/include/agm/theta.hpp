#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "agm/agm_core.hpp"

namespace agm {

// Symmetric complex g x g matrix with positive definite imaginary part.
class Tau {
 public:
  explicit Tau(Eigen::MatrixXcd entries);
  static Tau imaginary(const Eigen::MatrixXd& imag_part);

  int genus() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  // Symmetrized Im(tau).
  Eigen::MatrixXd imag_part() const;
  double min_imag_eigenvalue() const noexcept { return lambda_min_; }
  // max |tau - tau^t|
  double symmetry_defect() const;
  // max |Re tau|
  double real_part_norm() const;
  bool is_purely_imaginary() const;

  Tau scaled(double c) const;

 private:
  Eigen::MatrixXcd entries_;
  double lambda_min_;
};

struct ThetaVector {
  int genus = 0;
  std::vector<std::complex<double>> values;

  std::complex<double> operator[](const BitIndex& I) const { return values.at(I.value()); }
};

inline constexpr double kDefaultThetaAbsTol = 1e-14;

// Smallest N with 2^g (2N+3)^{g-1} exp(-pi lambda (N-1)^2) < abs_tol; the
// lattice box |n|_inf <= N then leaves an omitted tail below abs_tol.
int theta_truncation_radius(int genus, double lambda_min, double abs_tol);

// Box-truncated lattice sum with an explicit radius, bypassing the tail
// bound. Exposed for convergence checks.
ThetaVector theta_vector_radius(const Tau& tau, int radius);

// theta_I(tau) = sum_n exp(pi i n tau n^t + pi i n I^t).
std::complex<double> theta_constant(const BitIndex& I, const Tau& tau, double abs_tol = kDefaultThetaAbsTol);

// All 2^g characteristics from one lattice traversal.
ThetaVector theta_vector(const Tau& tau, double abs_tol = kDefaultThetaAbsTol);

// max_I |theta_I(2 tau)^2 - F_I(theta(tau))|
double duplication_residual(const Tau& tau, double abs_tol = kDefaultThetaAbsTol);

}  // namespace agm
