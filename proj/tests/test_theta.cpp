#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "agm/theta.hpp"

using namespace agm;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain nested sum over |n_k| <= R, g <= 2.
cd brute_theta(const BitIndex& I, const Eigen::MatrixXcd& tau, int R) {
  const int g = static_cast<int>(tau.rows());
  cd sum = 0.0;
  auto term = [&](const std::vector<int>& n) {
    cd q = 0.0;
    int dot = 0;
    for (int a = 0; a < g; ++a) {
      dot += n[a] * I.component(a + 1);
      for (int b = 0; b < g; ++b) q += double(n[a] * n[b]) * tau(a, b);
    }
    return std::exp(cd(0.0, kPi) * q) * ((dot % 2 == 0) ? 1.0 : -1.0);
  };
  if (g == 1) {
    for (int n = -R; n <= R; ++n) sum += term({n});
  } else {
    for (int n1 = -R; n1 <= R; ++n1)
      for (int n2 = -R; n2 <= R; ++n2) sum += term({n1, n2});
  }
  return sum;
}

Eigen::MatrixXd random_pd(std::mt19937_64& rng, int g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd L(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) L(i, j) = u(rng);
  return 0.5 * L * L.transpose() + 0.4 * Eigen::MatrixXd::Identity(g, g);
}

}  // namespace

TEST_CASE("Tau validation") {
  Eigen::MatrixXcd bad(2, 2);
  bad << cd(0, 1), cd(0, 0.2), cd(0, 0.3), cd(0, 1);
  CHECK_THROWS_AS(Tau{bad}, DomainError);
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1.0, 2.0, 2.0, 1.0;
  CHECK_THROWS_AS(Tau::imaginary(indefinite), DomainError);
  CHECK_THROWS_AS(Tau::imaginary(Eigen::MatrixXd(2, 3)), DimensionError);
  CHECK(Tau::imaginary(Eigen::MatrixXd::Identity(3, 3)).is_purely_imaginary());
}

TEST_CASE("genus one theta constants at tau = i and 2i") {
  const Tau t1 = Tau::imaginary(Eigen::MatrixXd::Identity(1, 1));
  const auto th = theta_vector(t1);
  const BitIndex z(1, 0), o(1, 1);
  CHECK(th[z].real() == doctest::Approx(1.08643481121330801458).epsilon(1e-15));
  CHECK(th[o].real() == doctest::Approx(0.91357913815611682141).epsilon(1e-15));
  CHECK(std::abs(th[z] - brute_theta(z, t1.entries(), 20)) < 1e-15);
  CHECK(std::abs(th[o] - brute_theta(o, t1.entries(), 20)) < 1e-15);

  const Tau t2 = t1.scaled(2.0);
  CHECK(theta_constant(z, t2).real() == doctest::Approx(1.00373488548773909105).epsilon(1e-15));
  CHECK(theta_constant(o, t2).real() == doctest::Approx(0.99626511456090713579).epsilon(1e-15));
}

TEST_CASE("diagonal tau factorizes") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.0, 0.0, 2.0;
  const auto th = theta_vector(Tau::imaginary(m));
  const double a[2] = {1.08643481121330801458, 0.91357913815611682141};
  const double b[2] = {1.00373488548773909105, 0.99626511456090713579};
  for (const auto& I : all_indices(2)) {
    const double expected = a[I.component(1)] * b[I.component(2)];
    CHECK(std::abs(th[I] - expected) < 1e-15);
  }
}

TEST_CASE("theta matches brute force for random tau, including a real part") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 6; ++trial) {
    for (int g : {1, 2}) {
      const Eigen::MatrixXd im = random_pd(rng, g);
      Eigen::MatrixXd re(g, g);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j <= i; ++j) re(i, j) = re(j, i) = (trial % 2 == 0) ? 0.0 : u(rng);
      Eigen::MatrixXcd entries = re.cast<cd>() + cd(0, 1) * im.cast<cd>();
      const Tau tau(entries);
      const auto th = theta_vector(tau);
      for (const auto& I : all_indices(g)) {
        CHECK(std::abs(th[I] - brute_theta(I, entries, 25)) < 1e-13);
        CHECK(std::abs(th[I] - theta_constant(I, tau)) < 1e-15);
      }
    }
  }
}

TEST_CASE("large imaginary part pushes theta to one") {
  for (int g : {1, 2, 3}) {
    for (double t : {2.0, 4.0, 8.0}) {
      const Tau tau = Tau::imaginary(t * Eigen::MatrixXd::Identity(g, g));
      const auto th = theta_vector(tau);
      for (const auto& I : all_indices(g)) CHECK(std::abs(th[I] - 1.0) < 3.0 * g * std::exp(-kPi * t));
    }
  }
}

TEST_CASE("purely imaginary tau gives positive real theta constants") {
  std::mt19937_64 rng(5);
  for (int g = 1; g <= 4; ++g) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto th = theta_vector(Tau::imaginary(random_pd(rng, g)));
      for (const auto& I : all_indices(g)) {
        CHECK(th[I].real() > 0.0);
        CHECK(th[I].imag() == 0.0);
      }
    }
  }
}

TEST_CASE("theta is even: full sum equals twice a half lattice plus one") {
  std::mt19937_64 rng(17);
  const Eigen::MatrixXd m = random_pd(rng, 2);
  const Tau tau = Tau::imaginary(m);
  const auto th = theta_vector(tau);
  for (const auto& I : all_indices(2)) {
    // n > 0 in lexicographic order
    double half = 0.0;
    for (int n1 = 0; n1 <= 25; ++n1)
      for (int n2 = -25; n2 <= 25; ++n2) {
        if (n1 == 0 && n2 <= 0) continue;
        const double q = m(0, 0) * n1 * n1 + 2 * m(0, 1) * n1 * n2 + m(1, 1) * n2 * n2;
        const int dot = n1 * I.component(1) + n2 * I.component(2);
        half += std::exp(-kPi * q) * ((dot % 2 == 0) ? 1.0 : -1.0);
      }
    CHECK(th[I].real() == doctest::Approx(1.0 + 2.0 * half).epsilon(1e-14));
  }
}

TEST_CASE("truncation radius leaves a tail below the tolerance") {
  std::mt19937_64 rng(23);
  for (int g = 1; g <= 3; ++g) {
    const Tau tau = Tau::imaginary(random_pd(rng, g));
    const int N = theta_truncation_radius(g, tau.min_imag_eigenvalue(), 1e-14);
    const auto near = theta_vector_radius(tau, N);
    const auto far = theta_vector_radius(tau, N + 3);
    for (const auto& I : all_indices(g)) CHECK(std::abs(near[I] - far[I]) < 1e-14);
  }
  CHECK(theta_truncation_radius(1, 1.0, 1e-14) < theta_truncation_radius(1, 0.1, 1e-14));
  CHECK_THROWS_AS(theta_truncation_radius(8, 1e-4, 1e-14), DomainError);
}

TEST_CASE("duplication identity") {
  CHECK(duplication_residual(Tau::imaginary(Eigen::MatrixXd::Identity(1, 1))) < 1e-12);
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.0, 0.0, 2.0;
  CHECK(duplication_residual(Tau::imaginary(m)) < 1e-12);
  std::mt19937_64 rng(29);
  for (int g = 1; g <= 3; ++g)
    for (int trial = 0; trial < 3; ++trial) CHECK(duplication_residual(Tau::imaginary(random_pd(rng, g))) < 1e-12);

  Eigen::MatrixXcd entries(2, 2);
  entries << cd(0.3, 1.1), cd(-0.2, 0.3), cd(-0.2, 0.3), cd(0.1, 0.9);
  CHECK(duplication_residual(Tau(entries)) < 1e-12);
}
