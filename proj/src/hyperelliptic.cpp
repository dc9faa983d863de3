#include "agm/hyperelliptic.hpp"

#include <cmath>
#include <numbers>

#include "agm/quadrature.hpp"

namespace agm {

BranchPoints::BranchPoints(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 3 || points_.size() % 2 == 0)
    throw DimensionError("branch points need an odd count 2g+1 >= 3, got " + std::to_string(points_.size()));
  if (genus() > kMaxGenus) throw DimensionError("genus exceeds " + std::to_string(kMaxGenus));
  for (double x : points_)
    if (!std::isfinite(x)) throw DomainError("branch points must be finite");
  for (std::size_t k = 1; k < points_.size(); ++k)
    if (!(points_[k - 1] < points_[k])) throw DomainError("branch points must be strictly increasing");
}

double BranchPoints::min_gap() const {
  double gap = points_[1] - points_[0];
  for (std::size_t k = 2; k < points_.size(); ++k) gap = std::min(gap, points_[k] - points_[k - 1]);
  return gap;
}

BranchPoints BranchPoints::shifted(double s) const {
  std::vector<double> q(points_);
  for (double& x : q) x += s;
  return BranchPoints(std::move(q));
}

BranchPoints BranchPoints::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("branch point scale must be positive");
  std::vector<double> q(points_);
  for (double& x : q) x *= c;
  return BranchPoints(std::move(q));
}

double t_integral(int i, int j, const BranchPoints& p, double rel_tol) {
  const int g = p.genus();
  if (i < 1 || i > 2 * g || j < 1 || j > g)
    throw DimensionError("T_i^(j) needs 1 <= i <= 2g and 1 <= j <= g");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) throw DomainError("period rel_tol must lie in (0, 1e-6]");

  const int count = static_cast<int>(p.size());
  // x^{j-1} over the radicand with the two endpoint factors removed.
  auto smooth = [&](double x) {
    double radicand = 1.0;
    for (int k = 1; k < i; ++k) radicand *= x - p.p(k);
    for (int k = i + 2; k <= count; ++k) radicand *= p.p(k) - x;
    return std::pow(x, j - 1) / std::sqrt(radicand);
  };
  // x^{j-1} changes sign when the interval straddles 0 and the integral can
  // cancel to near zero; measure convergence against the integral of |h|.
  double abs_tol = 0.0;
  if (j > 1 && p.p(i) < 0.0 && p.p(i + 1) > 0.0) {
    const double m = 0.5 * (p.p(i) + p.p(i + 1)), r = 0.5 * (p.p(i + 1) - p.p(i));
    const double scale = quad::gauss_legendre_sum(
        [&](double th) { return std::abs(smooth(m + r * std::sin(th))); }, -std::numbers::pi / 2,
        std::numbers::pi / 2, quad::NodeSchedule{}.initial);
    abs_tol = rel_tol * scale;
  }
  const double value = quad::endpoint_singular(smooth, p.p(i), p.p(i + 1), rel_tol, {}, abs_tol);
  if (!std::isfinite(value)) throw QuadratureError("T integral is not finite", value, value);
  return value;
}

PeriodPair period_matrices(const BranchPoints& p, double rel_tol) {
  const int g = p.genus();
  PeriodPair pp;
  pp.genus = g;
  pp.T.resize(2 * g, g);
  for (int i = 1; i <= 2 * g; ++i)
    for (int j = 1; j <= g; ++j) pp.T(i - 1, j - 1) = t_integral(i, j, p, rel_tol);

  pp.A.resize(g, g);
  pp.B_imag.resize(g, g);
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      pp.A(i - 1, j - 1) = (i % 2 == 0 ? 2.0 : -2.0) * pp.t(2 * i - 1, j);
      double b = 0.0;
      for (int k = i; k <= g; ++k) b += (k % 2 == 0 ? 1.0 : -1.0) * pp.t(2 * k, j);
      pp.B_imag(i - 1, j - 1) = 2.0 * b;
    }
  }
  pp.det_a = Eigen::PartialPivLU<Eigen::MatrixXd>(pp.A).determinant();
  if (!(std::abs(pp.det_a) > 0.0) || !std::isfinite(pp.det_a))
    throw LinearAlgebraError("period matrix A is singular");
  return pp;
}

Tau normalized_tau(const PeriodPair& pp) {
  if (!(std::abs(pp.det_a) > 0.0)) throw LinearAlgebraError("period matrix A is singular");
  // tau^t = A^{-t} B^t
  const Eigen::MatrixXd At = pp.A.transpose();
  const Eigen::MatrixXd im = Eigen::PartialPivLU<Eigen::MatrixXd>(At).solve(pp.B_imag.transpose()).transpose();
  return Tau(std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>());
}

}  // namespace agm
