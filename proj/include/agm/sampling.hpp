#pragma once

#include <cstdint>
#include <random>

#include "agm/genus2.hpp"

namespace agm {

// Seeded generator for randomized checks. Uniform draws are built directly
// from the 64-bit engine output so sequences do not depend on the standard
// library's distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);

  // Increasing points in [0, 10] with neighbouring gaps of at least 0.1.
  BranchPoints branch_points(int genus);
  // Entries in [1, max_ratio] times a random scale.
  MeanVector mean_vector(int genus, double max_ratio);
  // Satisfies Genus2Quadruple::validate().
  Genus2Quadruple quadruple();

 private:
  std::mt19937_64 engine_;
};

}  // namespace agm
