#pragma once

#include <cstdint>
#include <vector>

#include "agm/hyperelliptic.hpp"

namespace agm {

// Sorted subset of {1, ..., 2g+1}.
using IndexSet = std::vector<int>;

// eta_j in M(2, g, F_2), rows stored as g-bit masks in BitIndex layout
// (column 1 is the most significant bit).
struct EtaMatrix {
  int index = 0;
  int genus = 0;
  std::uint32_t top = 0;
  std::uint32_t bottom = 0;

  // j in 1..2g+1. Top row e_{ceil(j/2)} (zero when ceil(j/2) > g); bottom
  // row has ceil(j/2)-1 leading ones for odd j, ceil(j/2) for even j.
  static EtaMatrix make(int j, int genus);
};

struct ThomaePartition {
  BitIndex I;
  IndexSet t_set;       // subset of {1..2g}
  IndexSet s_set;       // t_set, plus 2g+1 when |t_set| is odd
  IndexSet sxu;         // s_set symmetric-difference {1, 3, ..., 2g+1}
  IndexSet complement;  // {1..2g+1} minus sxu
};

// The unique T_I with sum_{j in T_I} eta_j = (0; I); equals the union of
// {2i-1, 2i} over the i with I_i = 1.
IndexSet t_set(const BitIndex& I);

ThomaePartition partition(const BitIndex& I);

// prod_{i<j in sxu}(p_j - p_i) * prod_{i<j in complement}(p_j - p_i)
double thomae_product(const ThomaePartition& part, const BranchPoints& p);

// a_I = sqrt(thomae_product)
MeanVector initial_data(const BranchPoints& p);

struct ThomaeCheck {
  std::vector<double> lhs;  // (2 pi)^{2g} theta_I^4 / det(A)^2
  std::vector<double> rhs;  // thomae_product
  double residual = 0.0;    // max relative deviation
};

ThomaeCheck thomae_check(const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol,
                         double theta_abs_tol = kDefaultThetaAbsTol);
ThomaeCheck thomae_check(const BranchPoints& p, const PeriodPair& pp, const Tau& tau,
                         double theta_abs_tol = kDefaultThetaAbsTol);

double thomae_residual(const BranchPoints& p, double rel_tol = kDefaultPeriodRelTol);

}  // namespace agm
