#include "agm/theta.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace agm {

namespace {

constexpr double kSymmetryTol = 1e-10;
// Guard against lattice boxes that would take minutes to traverse.
constexpr double kMaxLatticePoints = 5e7;

// Neumaier-compensated accumulator; summation order is the fixed lattice
// traversal order, so results are reproducible.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Odometer over the box [-N, N]^g. Calls visit(n, parity_mask) where bit
// (g - k) of parity_mask is n_k mod 2, matching BitIndex layout.
template <class Visit>
void traverse_box(int genus, int radius, Visit&& visit) {
  std::vector<int> n(static_cast<std::size_t>(genus), -radius);
  while (true) {
    std::uint32_t parity = 0;
    for (int k = 0; k < genus; ++k)
      if (n[static_cast<std::size_t>(k)] & 1) parity |= 1u << (genus - 1 - k);
    visit(n, parity);
    int k = genus - 1;
    while (k >= 0 && n[static_cast<std::size_t>(k)] == radius) {
      n[static_cast<std::size_t>(k)] = -radius;
      --k;
    }
    if (k < 0) break;
    ++n[static_cast<std::size_t>(k)];
  }
}

ThetaVector lattice_sum(const Tau& tau, int radius) {
  const int g = tau.genus();
  const std::size_t count = index_count(g);
  ThetaVector out;
  out.genus = g;
  out.values.resize(count);

  if (tau.is_purely_imaginary()) {
    const Eigen::MatrixXd M = tau.imag_part();
    std::vector<CompensatedSum> acc(count);
    traverse_box(g, radius, [&](const std::vector<int>& n, std::uint32_t parity) {
      double q = 0.0;
      for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) q += n[static_cast<std::size_t>(a)] * M(a, b) * n[static_cast<std::size_t>(b)];
      const double term = std::exp(-std::numbers::pi * q);
      for (std::uint32_t I = 0; I < count; ++I) acc[I].add(std::popcount(parity & I) & 1 ? -term : term);
    });
    for (std::size_t I = 0; I < count; ++I) out.values[I] = acc[I].value();
    return out;
  }

  const Eigen::MatrixXcd& T = tau.entries();
  std::vector<CompensatedSum> re(count), im(count);
  const std::complex<double> i_pi(0.0, std::numbers::pi);
  traverse_box(g, radius, [&](const std::vector<int>& n, std::uint32_t parity) {
    std::complex<double> q = 0.0;
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b)
        q += static_cast<double>(n[static_cast<std::size_t>(a)] * n[static_cast<std::size_t>(b)]) * T(a, b);
    const std::complex<double> term = std::exp(i_pi * q);
    for (std::uint32_t I = 0; I < count; ++I) {
      const double sign = std::popcount(parity & I) & 1 ? -1.0 : 1.0;
      re[I].add(sign * term.real());
      im[I].add(sign * term.imag());
    }
  });
  for (std::size_t I = 0; I < count; ++I) out.values[I] = {re[I].value(), im[I].value()};
  return out;
}

void check_tol(double abs_tol) {
  if (!(abs_tol > 0.0 && abs_tol <= 1e-6)) throw DomainError("theta abs_tol must lie in (0, 1e-6]");
}

}  // namespace

Tau::Tau(Eigen::MatrixXcd entries) : entries_(std::move(entries)), lambda_min_(0.0) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1 || entries_.rows() > kMaxGenus)
    throw DimensionError("tau must be a square matrix of size 1.." + std::to_string(kMaxGenus));
  if (!entries_.allFinite()) throw DomainError("tau has non-finite entries");
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if (symmetry_defect() > kSymmetryTol * scale) throw DomainError("tau is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(imag_part(), Eigen::EigenvaluesOnly);
  lambda_min_ = solver.eigenvalues().minCoeff();
  if (!(lambda_min_ > 0.0)) throw DomainError("imaginary part of tau is not positive definite");
}

Tau Tau::imaginary(const Eigen::MatrixXd& imag_part) {
  return Tau(std::complex<double>(0.0, 1.0) * imag_part.cast<std::complex<double>>());
}

Eigen::MatrixXd Tau::imag_part() const {
  const Eigen::MatrixXd im = entries_.imag();
  return 0.5 * (im + im.transpose());
}

double Tau::symmetry_defect() const { return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff(); }

double Tau::real_part_norm() const { return entries_.real().cwiseAbs().maxCoeff(); }

bool Tau::is_purely_imaginary() const { return real_part_norm() == 0.0; }

Tau Tau::scaled(double c) const { return Tau(entries_ * c); }

int theta_truncation_radius(int genus, double lambda_min, double abs_tol) {
  if (!(lambda_min > 0.0)) throw DomainError("theta truncation needs a positive definite imaginary part");
  const double log_tol = std::log(abs_tol);
  for (int N = 1;; ++N) {
    const double log_bound = genus * std::numbers::ln2 + (genus - 1) * std::log(2.0 * N + 3.0) -
                             std::numbers::pi * lambda_min * (N - 1.0) * (N - 1.0);
    if (log_bound < log_tol) return N;
    if (std::pow(2.0 * N + 1.0, genus) > kMaxLatticePoints)
      throw DomainError("theta lattice box too large; smallest eigenvalue of Im tau is " +
                        std::to_string(lambda_min));
  }
}

ThetaVector theta_vector_radius(const Tau& tau, int radius) {
  if (radius < 0) throw DomainError("negative truncation radius");
  return lattice_sum(tau, radius);
}

ThetaVector theta_vector(const Tau& tau, double abs_tol) {
  check_tol(abs_tol);
  return lattice_sum(tau, theta_truncation_radius(tau.genus(), tau.min_imag_eigenvalue(), abs_tol));
}

std::complex<double> theta_constant(const BitIndex& I, const Tau& tau, double abs_tol) {
  if (I.genus() != tau.genus()) throw DimensionError("characteristic genus does not match tau");
  return theta_vector(tau, abs_tol)[I];
}

double duplication_residual(const Tau& tau, double abs_tol) {
  const ThetaVector base = theta_vector(tau, abs_tol);
  const ThetaVector doubled = theta_vector(tau.scaled(2.0), abs_tol);
  const std::span<const std::complex<double>> u(base.values);
  double worst = 0.0;
  for (std::uint32_t I = 0; I < base.values.size(); ++I) {
    const std::complex<double> lhs = doubled.values[I] * doubled.values[I];
    worst = std::max(worst, std::abs(lhs - quadratic_form_values(I, u)));
  }
  return worst;
}

}  // namespace agm
