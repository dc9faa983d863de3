#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "agm/errors.hpp"

namespace agm::quad {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached; safe to call from several threads.
const GaussLegendreRule& gauss_legendre(int n);

struct NodeSchedule {
  int initial = 32;
  int cap = 4096;
};

template <class F>
double gauss_legendre_sum(const F& f, double a, double b, int n) {
  const auto& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

// Gauss-Legendre on [a, b], doubling the node count until two successive
// estimates agree to rel_tol, or to abs_tol when the integral is near zero.
// Returns the finer estimate.
template <class F>
double gauss_legendre_doubling(const F& f, double a, double b, double rel_tol, NodeSchedule schedule = {},
                               double abs_tol = 0.0) {
  double previous = gauss_legendre_sum(f, a, b, schedule.initial);
  double current = previous;
  for (int n = 2 * schedule.initial; n <= schedule.cap; n *= 2) {
    previous = current;
    current = gauss_legendre_sum(f, a, b, n);
    if (!std::isfinite(current))
      throw QuadratureError("non-finite quadrature estimate", previous, current);
    if (std::abs(current - previous) <= std::max(rel_tol * std::abs(current), abs_tol)) return current;
  }
  throw QuadratureError("Gauss-Legendre estimates did not settle to rel_tol " + std::to_string(rel_tol) +
                            " within " + std::to_string(schedule.cap) + " nodes",
                        previous, current);
}

// Integral of h(x) / sqrt((x - a)(b - x)) over [a, b] for smooth h. The
// substitution x = m + r sin(theta) cancels the endpoint factor exactly.
template <class H>
double endpoint_singular(const H& h, double a, double b, double rel_tol, NodeSchedule schedule = {},
                         double abs_tol = 0.0) {
  if (!(a < b)) throw DomainError("endpoint_singular needs a < b");
  const double m = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  auto integrand = [&](double theta) { return h(m + r * std::sin(theta)); };
  return gauss_legendre_doubling(integrand, -std::numbers::pi / 2, std::numbers::pi / 2, rel_tol, schedule,
                                 abs_tol);
}

// Integral of h(t) / sqrt(t (t + delta)) over [0, length]: an inverse square
// root at t = 0 with a second branch point at distance delta >= 0 behind it.
// t = delta sinh^2(u) absorbs both factors, so the result is uniform in delta.
// h receives t, which is accurate near 0.
template <class H>
double paired_singular(const H& h, double length, double delta, double rel_tol, NodeSchedule schedule = {}) {
  if (!(length > 0.0)) throw DomainError("paired_singular needs a positive length");
  if (!(delta > 0.0)) throw DomainError("paired_singular: coincident branch points are not integrable");
  const double u_max = std::asinh(std::sqrt(length / delta));
  auto integrand = [&](double u) {
    const double s = std::sinh(u);
    return 2.0 * h(delta * s * s);
  };
  return gauss_legendre_doubling(integrand, 0.0, u_max, rel_tol, schedule);
}

// Tanh-sinh (double exponential) rule on [a, b] for integrands with
// algebraic or logarithmic endpoint singularities. f(x, da, db) receives the
// node and its distances to a and b, computed without cancellation.
template <class F>
double tanh_sinh(const F& f, double a, double b, double rel_tol, int max_level = 10) {
  if (!(a < b)) throw DomainError("tanh_sinh needs a < b");
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  constexpr double kHalfPi = std::numbers::pi / 2;
  // Nodes closer to an end than half * 1e-32 are dropped; the omitted
  // mass is below 1e-16 relative for inverse-square-root singularities.
  constexpr double kCutoff = 1e-32;

  // Contribution of the symmetric pair +-t.
  auto pair = [&](double t) -> double {
    const double s = kHalfPi * std::sinh(t);
    const double c = std::cosh(s);
    const double w = kHalfPi * std::cosh(t) / (c * c);
    // 1 - tanh(|s|) without cancellation
    const double e = std::exp(-2.0 * std::abs(s));
    const double near = 2.0 * e / (1.0 + e);
    if (near < kCutoff) return 0.0;
    const double far = 2.0 - near;
    const double x_lo = mid - half * (1.0 - near);
    const double x_hi = mid + half * (1.0 - near);
    double sum = f(x_hi, half * far, half * near);
    if (t != 0.0) sum += f(x_lo, half * near, half * far);
    return w * sum;
  };

  auto tail_done = [&](double t) {
    const double s = kHalfPi * std::sinh(t);
    return 2.0 * std::exp(-2.0 * s) / (1.0 + std::exp(-2.0 * s)) < kCutoff;
  };

  double h = 1.0;
  double sum = pair(0.0);
  for (double t = h; !tail_done(t); t += h) sum += pair(t);
  double previous = half * h * sum;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; !tail_done(t); t += 2.0 * h) sum += pair(t);
    const double current = half * h * sum;
    if (!std::isfinite(current)) throw QuadratureError("non-finite tanh-sinh estimate", previous, current);
    if (level >= 3 && std::abs(current - previous) <= rel_tol * std::abs(current)) return current;
    previous = current;
  }
  throw QuadratureError("tanh-sinh estimates did not settle to rel_tol " + std::to_string(rel_tol), previous,
                        half * h * sum);
}

}  // namespace agm::quad
