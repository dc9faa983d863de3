#include "agm/thomae.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>

namespace agm {

EtaMatrix EtaMatrix::make(int j, int genus) {
  if (genus < 1 || genus > kMaxGenus) throw DimensionError("eta genus out of range");
  if (j < 1 || j > 2 * genus + 1) throw DimensionError("eta index out of range");
  const int col = (j + 1) / 2;
  const int ones = j % 2 == 1 ? col - 1 : col;
  EtaMatrix eta;
  eta.index = j;
  eta.genus = genus;
  if (col <= genus) eta.top = 1u << (genus - col);
  for (int c = 1; c <= ones; ++c) eta.bottom |= 1u << (genus - c);
  return eta;
}

IndexSet t_set(const BitIndex& I) {
  IndexSet out;
  for (int i = 1; i <= I.genus(); ++i) {
    if (I.component(i)) {
      out.push_back(2 * i - 1);
      out.push_back(2 * i);
    }
  }
  return out;
}

ThomaePartition partition(const BitIndex& I) {
  const int g = I.genus();
  ThomaePartition part{I, t_set(I), {}, {}, {}};
  part.s_set = part.t_set;
  if (part.s_set.size() % 2 == 1) part.s_set.push_back(2 * g + 1);

  IndexSet u;
  for (int k = 1; k <= 2 * g + 1; k += 2) u.push_back(k);
  std::set_symmetric_difference(part.s_set.begin(), part.s_set.end(), u.begin(), u.end(),
                                std::back_inserter(part.sxu));
  for (int k = 1; k <= 2 * g + 1; ++k)
    if (!std::binary_search(part.sxu.begin(), part.sxu.end(), k)) part.complement.push_back(k);
  return part;
}

double thomae_product(const ThomaePartition& part, const BranchPoints& p) {
  if (part.I.genus() != p.genus()) throw DimensionError("partition genus does not match branch points");
  // Direct products overflow for many points; switch to logs beyond 7.
  const bool use_logs = p.size() > 7;
  double product = 1.0;
  double log_sum = 0.0;
  for (const IndexSet* set : {&part.sxu, &part.complement}) {
    for (std::size_t a = 0; a < set->size(); ++a) {
      for (std::size_t b = a + 1; b < set->size(); ++b) {
        const double diff = p.p((*set)[b]) - p.p((*set)[a]);
        if (use_logs)
          log_sum += std::log(diff);
        else
          product *= diff;
      }
    }
  }
  return use_logs ? std::exp(log_sum) : product;
}

MeanVector initial_data(const BranchPoints& p) {
  const int g = p.genus();
  std::vector<double> a;
  a.reserve(index_count(g));
  for (const BitIndex& I : all_indices(g)) a.push_back(std::sqrt(thomae_product(partition(I), p)));
  return MeanVector(g, std::move(a));
}

ThomaeCheck thomae_check(const BranchPoints& p, const PeriodPair& pp, const Tau& tau, double theta_abs_tol) {
  const int g = p.genus();
  if (pp.genus != g || tau.genus() != g) throw DimensionError("thomae check inputs disagree on genus");
  const ThetaVector theta = theta_vector(tau, theta_abs_tol);
  const double scale = std::pow(2.0 * std::numbers::pi, 2 * g) / (pp.det_a * pp.det_a);
  ThomaeCheck check;
  for (const BitIndex& I : all_indices(g)) {
    const double t = theta[I].real();
    const double lhs = scale * t * t * t * t;
    const double rhs = thomae_product(partition(I), p);
    check.lhs.push_back(lhs);
    check.rhs.push_back(rhs);
    check.residual = std::max(check.residual, std::abs(lhs - rhs) / rhs);
  }
  return check;
}

ThomaeCheck thomae_check(const BranchPoints& p, double rel_tol, double theta_abs_tol) {
  const PeriodPair pp = period_matrices(p, rel_tol);
  return thomae_check(p, pp, normalized_tau(pp), theta_abs_tol);
}

double thomae_residual(const BranchPoints& p, double rel_tol) { return thomae_check(p, rel_tol).residual; }

}  // namespace agm
