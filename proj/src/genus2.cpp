#include "agm/genus2.hpp"

#include <cmath>
#include <numbers>

#include "agm/thomae.hpp"

namespace agm {

void Genus2Quadruple::validate() const {
  for (double x : {a00, a01, a10, a11})
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("genus-2 means must be finite and positive");
  if (!(a00 > a10)) throw DomainError("constraint a00 > a10 violated");
  if (!(a10 > a11)) throw DomainError("constraint a10 > a11 violated");
  if (!(a11 > a01)) throw DomainError("constraint a11 > a01 violated");
  if (!(a00 * a01 > a10 * a11)) throw DomainError("constraint a00*a01 > a10*a11 violated");
}

Genus2Quadruple Genus2Quadruple::from_means(const MeanVector& a) {
  if (a.genus() != 2) throw DimensionError("genus-2 quadruple needs a genus-2 mean vector");
  return {a[0], a[1], a[2], a[3]};
}

MeanVector Genus2Quadruple::to_means() const { return MeanVector(2, {a00, a01, a10, a11}); }

Genus2Moduli moduli_from_means(const Genus2Quadruple& a) {
  a.validate();
  const double s1 = a.a00 + a.a01, t1 = a.a10 + a.a11;
  const double s2 = a.a00 - a.a01, t2 = a.a10 - a.a11;
  Genus2Moduli m;
  // s - t regrouped as differences of the inputs, which are exact when close
  const double d0 = a.a00 - a.a10, d1 = a.a01 - a.a11;
  m.k1 = std::sqrt((d0 + d1) * (s1 + t1));
  m.k2 = std::sqrt((d0 - d1) * (s2 + t2));
  // (1 + l^2)/(1 - l^2) = s/k  <=>  l^2 = (s - k)/(s + k) = t^2/(s + k)^2
  m.l1 = t1 / (s1 + m.k1);
  m.l2 = t2 / (s2 + m.k2);
  return m;
}

BranchPoints branch_points_from_means(const Genus2Quadruple& a) {
  const Genus2Moduli m = moduli_from_means(a);
  const double u1 = 1.0 - m.l1 * m.l1;
  const double u2 = 1.0 - m.l2 * m.l2;
  const double cross = (m.l1 * m.l2 + 1.0) / (1.0 - m.l1 * m.l2);
  const double p2 = 1.0 / (u2 * u1);
  const double p3 = 2.0 * cross * a.a00 / (u1 * u2 * (m.k1 + m.k2));
  const double p4 = 2.0 * cross * a.a01 / (u1 * u2 * (m.k1 - m.k2));
  const double p5 = 4.0 * a.a00 * a.a01 / ((m.k1 - m.k2) * (m.k1 + m.k2) * u2 * u1);
  const std::vector<double> p{0.0, p2, p3, p4, p5};
  for (std::size_t k = 1; k < p.size(); ++k)
    if (!(p[k - 1] < p[k]))
      throw OrderingError("derived branch points not increasing at p_" + std::to_string(k) + " = " +
                          std::to_string(p[k - 1]) + ", p_" + std::to_string(k + 1) + " = " + std::to_string(p[k]));
  return BranchPoints(p);
}

double ratio_residual(const Genus2Quadruple& a, const BranchPoints& p) {
  if (p.genus() != 2) throw DimensionError("ratio relation needs genus-2 branch points");
  const MeanVector means = a.to_means();
  const double base = thomae_product(partition(BitIndex(2, 0)), p);
  double worst = 0.0;
  for (const BitIndex& I : all_indices(2)) {
    const double expected = (means[I] / a.a00) * (means[I] / a.a00);
    const double ratio = thomae_product(partition(I), p) / base;
    worst = std::max(worst, std::abs(ratio - expected) / expected);
  }
  return worst;
}

Genus2Limit closed_form_limit(const Genus2Quadruple& a, double rel_tol) {
  const Genus2Moduli m = moduli_from_means(a);
  const BranchPoints p = branch_points_from_means(a);
  const PeriodPair pp = period_matrices(p, rel_tol);
  constexpr double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;

  Genus2Limit out;
  out.abs_det_a = std::abs(pp.det_a);
  const double p00 = (p.p(3) - p.p(1)) * (p.p(5) - p.p(1)) * (p.p(5) - p.p(3)) * (p.p(4) - p.p(2));
  out.det_form = four_pi_sq * a.a00 / (out.abs_det_a * std::sqrt(p00));

  // 1 - l^2 = 2k / (s + k)
  const double u1 = 2.0 * m.k1 / (a.a00 + a.a01 + m.k1);
  const double u2 = 2.0 * m.k2 / (a.a00 - a.a01 + m.k2);
  // a00 a01 - a10 a11 without the rounding of either product
  const double w = a.a10 * a.a11;
  const double gap = std::fma(a.a00, a.a01, -w) - std::fma(a.a10, a.a11, -w);
  const double minus = 1.0 - m.l1 * m.l2;
  const double radical = std::sqrt(gap * gap * gap * minus * minus * minus /
                                    (a.a00 * a.a01 * a.a10 * a.a11 * (m.l1 - m.l2) * (m.l1 + m.l2) *
                                     (1.0 + m.l1 * m.l2)));
  out.expanded_form = four_pi_sq / out.abs_det_a * u1 * u1 * u2 * u2 * radical;
  return out;
}

}  // namespace agm
