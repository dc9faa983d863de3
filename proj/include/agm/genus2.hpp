#pragma once

#include "agm/hyperelliptic.hpp"

namespace agm {

// Initial means (a_00, a_01, a_10, a_11) subject to
// a_00 > a_10 > a_11 > a_01 and a_00 a_01 > a_10 a_11.
struct Genus2Quadruple {
  double a00 = 0.0;
  double a01 = 0.0;
  double a10 = 0.0;
  double a11 = 0.0;

  // Throws DomainError naming the first violated inequality.
  void validate() const;

  static Genus2Quadruple from_means(const MeanVector& a);
  MeanVector to_means() const;
  Genus2Quadruple scaled(double c) const { return {c * a00, c * a01, c * a10, c * a11}; }
};

// (a00 + a01)^2 - (a10 + a11)^2 = k1^2,  a00 + a01 = (1 + l1^2)/(1 - l1^2) k1,
// (a00 - a01)^2 - (a10 - a11)^2 = k2^2,  a00 - a01 = (1 + l2^2)/(1 - l2^2) k2.
struct Genus2Moduli {
  double k1 = 0.0;
  double k2 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

Genus2Moduli moduli_from_means(const Genus2Quadruple& a);

// (0, p_2, p_3, p_4, p_5); throws OrderingError if the result is not
// strictly increasing.
BranchPoints branch_points_from_means(const Genus2Quadruple& a);

// Max relative deviation between a_I^2 / a_00^2 and the matching ratio of
// products of branch point differences.
double ratio_residual(const Genus2Quadruple& a, const BranchPoints& p);

struct Genus2Limit {
  double abs_det_a = 0.0;
  // 4 pi^2 a00 / (|det A| sqrt((p3-p1)(p5-p1)(p5-p3)(p4-p2)))
  double det_form = 0.0;
  // 4 pi^2 / |det A| (1-l1^2)^2 (1-l2^2)^2
  //   sqrt((a00 a01 - a10 a11)^3 (1 - l1 l2)^3 / (a00 a01 a10 a11 (l1^2 - l2^2)(1 + l1 l2)))
  double expanded_form = 0.0;
};

Genus2Limit closed_form_limit(const Genus2Quadruple& a, double rel_tol = kDefaultPeriodRelTol);

}  // namespace agm
