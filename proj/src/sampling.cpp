#include "agm/sampling.hpp"

#include <algorithm>

namespace agm {

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

BranchPoints Sampler::branch_points(int genus) {
  constexpr double kSpan = 10.0;
  constexpr double kMinGap = 0.1;
  const int n = 2 * genus + 1;
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& x : p) x = uniform(0.0, kSpan - kMinGap * (n - 1));
  std::sort(p.begin(), p.end());
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] += kMinGap * k;
  return BranchPoints(std::move(p));
}

MeanVector Sampler::mean_vector(int genus, double max_ratio) {
  const double scale = uniform(0.1, 10.0);
  std::vector<double> v(index_count(genus));
  for (double& x : v) x = scale * uniform(1.0, max_ratio);
  return MeanVector(genus, std::move(v));
}

Genus2Quadruple Sampler::quadruple() {
  const double scale = uniform(0.5, 5.0);
  while (true) {
    const double a01 = uniform(0.2, 0.95);
    const double a11 = uniform(a01, 1.0);
    const double a10 = uniform(a11, 1.0);
    Genus2Quadruple q{1.0, a01, a10, a11};
    if (a01 < a11 && a11 < a10 && a10 < 1.0 && a10 * a11 < a01) return q.scaled(scale);
  }
}

}  // namespace agm
