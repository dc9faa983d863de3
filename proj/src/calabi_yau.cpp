#include "agm/calabi_yau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "agm/quadrature.hpp"

namespace agm {

VeroneseForms::VeroneseForms(const BranchPoints& p) : genus_(p.genus()), points_(p) {
  const int g = genus_;
  coefficients_.resize(static_cast<std::size_t>(count() * (g + 1)));
  for (int i = 1; i <= count(); ++i) {
    double power = 1.0;  // (-p_i)^{k-1}
    for (int k = 1; k <= g + 1; ++k) {
      coefficients_[static_cast<std::size_t>((i - 1) * (g + 1) + (k - 1))] = power;
      power *= -p.p(i);
    }
  }
}

double VeroneseForms::coefficient(int i, int k) const {
  if (i < 1 || i > count() || k < 1 || k > genus_) throw DimensionError("Veronese form index out of range");
  return coefficients_[static_cast<std::size_t>((i - 1) * (genus_ + 1) + (k - 1))];
}

double VeroneseForms::constant(int i) const {
  if (i < 1 || i > count()) throw DimensionError("Veronese form index out of range");
  return coefficients_[static_cast<std::size_t>((i - 1) * (genus_ + 1) + genus_)];
}

double VeroneseForms::evaluate(int i, std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != genus_) throw DimensionError("xi has wrong dimension");
  double value = constant(i);
  for (int k = 1; k <= genus_; ++k) value += coefficient(i, k) * xi[static_cast<std::size_t>(k - 1)];
  return value;
}

int VeroneseForms::required_sign(int i) noexcept {
  const int m = (i + 1) / 2;
  const int exponent = i % 2 == 1 ? m - 1 : m;
  return exponent % 2 == 0 ? 1 : -1;
}

double VeroneseForms::sign_adjusted_radicand(std::span<const double> xi) const {
  double product = 1.0;
  for (int i = 1; i <= count(); ++i) product *= required_sign(i) * evaluate(i, xi);
  return product;
}

std::vector<double> veronese_image(std::span<const double> x) {
  const std::size_t g = x.size();
  // e[m] = e_m(x_1..x_r), built up one variable at a time
  std::vector<double> e(g + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t m = r + 1; m >= 1; --m) e[m] += x[r] * e[m - 1];
  std::vector<double> xi(g);
  for (std::size_t k = 1; k <= g; ++k) xi[k - 1] = e[g + 1 - k];
  return xi;
}

bool delta_contains(std::span<const double> xi, const VeroneseForms& forms) {
  for (int i = 1; i <= forms.count(); ++i)
    if (VeroneseForms::required_sign(i) * forms.evaluate(i, xi) < 0.0) return false;
  return true;
}

namespace {

// For fixed outer coordinates every l_i equals xi_1 - c_i. Integrates
// 1 / sqrt(prod_i s_i (xi_1 - c_i)) over the xi_1-interval where all
// s_i (xi_1 - c_i) >= 0. diff(i, j) must return c_i - c_j; callers compute
// it without cancellation near collisions.
template <class Diff>
double inner_integral(const std::vector<int>& sides, const Diff& diff, double rel_tol) {
  const int n = static_cast<int>(sides.size());
  int lo = -1, hi = -1;
  for (int i = 0; i < n; ++i) {
    if (sides[static_cast<std::size_t>(i)] > 0) {
      if (lo < 0 || diff(i, lo) > 0.0) lo = i;
    } else if (hi < 0 || diff(i, hi) < 0.0) {
      hi = i;
    }
  }
  if (lo < 0 || hi < 0) throw DomainError("unbounded inner integration range");
  const double width = diff(hi, lo);
  if (!(width > 0.0)) return 0.0;
  const double half = 0.5 * width;

  // One half of the interval, measured by t from its singular end. The
  // active constraint and its nearest same-side neighbour (gap delta) go
  // into the paired kernel; when there is no neighbour a stand-in gap is
  // used and compensated in the integrand.
  auto half_integral = [&](int active, int side) {
    int neighbour = -1;
    double delta = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == active || sides[static_cast<std::size_t>(i)] != side) continue;
      const double gap = side > 0 ? diff(active, i) : diff(i, active);
      if (neighbour < 0 || gap < delta) {
        neighbour = i;
        delta = gap;
      }
    }
    const bool stand_in = neighbour < 0;
    if (stand_in) delta = half;
    auto smooth = [&](double t) {
      double radicand = 1.0;
      for (int i = 0; i < n; ++i) {
        if (i == active || i == neighbour) continue;
        const double gap = side > 0 ? diff(active, i) : diff(i, active);
        // same side: distance grows with t; opposite side: shrinks
        radicand *= sides[static_cast<std::size_t>(i)] == side ? t + gap : -gap - t;
      }
      const double value = 1.0 / std::sqrt(radicand);
      return stand_in ? value * std::sqrt(t + delta) : value;
    };
    return quad::paired_singular(smooth, half, delta, rel_tol);
  };

  return half_integral(lo, +1) + half_integral(hi, -1);
}

std::vector<int> constraint_sides(int count) {
  std::vector<int> sides;
  for (int i = 1; i <= count; ++i) sides.push_back(VeroneseForms::required_sign(i));
  return sides;
}

double delta_integral_genus1(const BranchPoints& p, double rel_tol) {
  const std::vector<int> sides = constraint_sides(3);
  auto diff = [&](int i, int j) { return p.p(i + 1) - p.p(j + 1); };
  return inner_integral(sides, diff, rel_tol);
}

double delta_integral_genus2(const BranchPoints& p, double rel_tol) {
  constexpr int n = 5;
  const std::vector<int> sides = constraint_sides(n);

  // l_i = xi_1 - c_i(xi_2) with c_i = p_i xi_2 - p_i^2, so c_i = c_j exactly
  // at xi_2 = p_i + p_j. These collisions split the xi_2-axis into panels
  // on which the active constraints do not change.
  std::vector<double> breaks;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) breaks.push_back(p.p(i) + p.p(j));
  std::sort(breaks.begin(), breaks.end());
  const double scale = std::abs(breaks.front()) + std::abs(breaks.back());
  const double merge = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  std::vector<double> unique_breaks;
  for (double b : breaks)
    if (unique_breaks.empty() || b - unique_breaks.back() > merge) unique_breaks.push_back(b);

  auto break_id = [&](double s) {
    for (std::size_t k = 0; k < unique_breaks.size(); ++k)
      if (std::abs(s - unique_breaks[k]) <= merge) return static_cast<int>(k);
    return -1;
  };
  int pair_break[n][n];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pair_break[i][j] = i == j ? -1 : break_id(p.p(i + 1) + p.p(j + 1));

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < unique_breaks.size(); ++k) {
    const double a = unique_breaks[k];
    const double b = unique_breaks[k + 1];
    const int id_a = static_cast<int>(k);
    const int id_b = static_cast<int>(k + 1);

    auto make_diff = [&](double xi2, double da, double db) {
      return [=, &p, &pair_break](int i, int j) {
        if (i == j) return 0.0;
        const double pi = p.p(i + 1), pj = p.p(j + 1);
        double offset;
        if (pair_break[i][j] == id_a)
          offset = da;
        else if (pair_break[i][j] == id_b)
          offset = -db;
        else
          offset = xi2 - (pi + pj);
        return (pi - pj) * offset;
      };
    };

    // feasibility of the panel, tested at its midpoint
    const double mid = 0.5 * (a + b);
    auto mid_diff = make_diff(mid, mid - a, b - mid);
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double c = mid_diff(i, 0) + (p.p(1) * mid - p.p(1) * p.p(1));
      if (sides[static_cast<std::size_t>(i)] > 0)
        lo = std::max(lo, c);
      else
        hi = std::min(hi, c);
    }
    if (!(lo < hi)) continue;

    auto outer = [&](double xi2, double da, double db) {
      return inner_integral(sides, make_diff(xi2, da, db), rel_tol);
    };
    total += quad::tanh_sinh(outer, a, b, rel_tol);
  }
  return total;
}

}  // namespace

double delta_integral(const BranchPoints& p, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) throw DomainError("cy rel_tol must lie in (0, 1e-3]");
  switch (p.genus()) {
    case 1:
      return delta_integral_genus1(p, rel_tol);
    case 2:
      return delta_integral_genus2(p, rel_tol);
    default:
      throw DomainError("Calabi-Yau period supports genus 1 and 2, got " + std::to_string(p.genus()));
  }
}

double cy_period(const BranchPoints& p, double rel_tol) { return 2.0 * delta_integral(p, rel_tol); }

double pushforward_residual(const BranchPoints& p, double cy, const PeriodPair& pp) {
  const double lhs = std::ldexp(cy, p.genus() - 1);
  const double rhs = std::abs(pp.det_a);
  return std::abs(lhs - rhs) / rhs;
}

double pushforward_residual(const BranchPoints& p, double rel_tol) {
  return pushforward_residual(p, cy_period(p, rel_tol), period_matrices(p, rel_tol));
}

}  // namespace agm
