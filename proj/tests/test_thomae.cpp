#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "agm/thomae.hpp"

using namespace agm;

namespace {

std::vector<double> random_points(std::mt19937_64& rng, int g) {
  std::uniform_real_distribution<double> u(-3.0, 6.0);
  std::vector<double> p(2 * g + 1);
  for (auto& x : p) x = u(rng);
  std::sort(p.begin(), p.end());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] += 0.2 * k;
  return p;
}

// Every subset of {1..2g} whose eta sum is (0; I).
std::vector<IndexSet> exhaustive_t_sets(const BitIndex& I) {
  const int g = I.genus();
  std::vector<IndexSet> hits;
  for (std::uint32_t mask = 0; mask < (1u << (2 * g)); ++mask) {
    std::uint32_t top = 0, bottom = 0;
    IndexSet s;
    for (int j = 1; j <= 2 * g; ++j) {
      if (!(mask >> (j - 1) & 1u)) continue;
      const auto eta = EtaMatrix::make(j, g);
      top ^= eta.top;
      bottom ^= eta.bottom;
      s.push_back(j);
    }
    if (top == 0 && bottom == I.value()) hits.push_back(s);
  }
  return hits;
}

}  // namespace

TEST_CASE("eta matrices") {
  // g = 2: eta_1 = (10; 00), eta_2 = (10; 10), eta_3 = (01; 10), eta_4 = (01; 11), eta_5 = (00; 11)
  const std::uint32_t top[5] = {0b10, 0b10, 0b01, 0b01, 0b00};
  const std::uint32_t bottom[5] = {0b00, 0b10, 0b10, 0b11, 0b11};
  for (int j = 1; j <= 5; ++j) {
    const auto eta = EtaMatrix::make(j, 2);
    CHECK(eta.top == top[j - 1]);
    CHECK(eta.bottom == bottom[j - 1]);
  }
  CHECK_THROWS(EtaMatrix::make(6, 2));
}

TEST_CASE("t_set is the unique solution of the eta sum") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& I : all_indices(g)) {
      const auto hits = exhaustive_t_sets(I);
      REQUIRE(hits.size() == 1);
      CHECK(hits.front() == t_set(I));
      CHECK(t_set(I).size() % 2 == 0);
    }
  CHECK(t_set(BitIndex::parse("00")).empty());
  CHECK(t_set(BitIndex::parse("01")) == IndexSet{3, 4});
  CHECK(t_set(BitIndex::parse("10")) == IndexSet{1, 2});
  CHECK(t_set(BitIndex::parse("11")) == IndexSet{1, 2, 3, 4});
}

TEST_CASE("partition examples") {
  auto p00 = partition(BitIndex::parse("00"));
  CHECK(p00.sxu == IndexSet{1, 3, 5});
  CHECK(p00.complement == IndexSet{2, 4});
  auto p01 = partition(BitIndex::parse("01"));
  CHECK(p01.sxu == IndexSet{1, 4, 5});
  CHECK(p01.complement == IndexSet{2, 3});
  auto p0 = partition(BitIndex::parse("0"));
  CHECK(p0.sxu == IndexSet{1, 3});
  CHECK(p0.complement == IndexSet{2});
  for (int g = 1; g <= 5; ++g)
    for (const auto& I : all_indices(g)) {
      const auto part = partition(I);
      CHECK(static_cast<int>(part.sxu.size()) == g + 1);
      CHECK(static_cast<int>(part.complement.size()) == g);
    }
}

TEST_CASE("initial data") {
  const BranchPoints p({0.0, 1.0, 2.0, 3.0, 4.0});
  const auto a = initial_data(p);
  CHECK(a[BitIndex::parse("00")] == doctest::Approx(std::sqrt(32.0)).epsilon(1e-15));
  // I = 01: {1,4,5} -> 3 * 4 * 1, {2,3} -> 1
  CHECK(a[BitIndex::parse("01")] == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));

  std::mt19937_64 rng(13);
  for (int g = 1; g <= 4; ++g) {
    const BranchPoints q(random_points(rng, g));
    const auto base = initial_data(q);
    const auto moved = initial_data(q.shifted(4.25));
    const double c = 0.6;
    const auto grown = initial_data(q.scaled(c));
    const double factor = std::pow(c, g * g / 2.0);
    for (std::size_t k = 0; k < base.size(); ++k) {
      CHECK(moved[k] == doctest::Approx(base[k]).epsilon(1e-12));
      CHECK(grown[k] == doctest::Approx(factor * base[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("Thomae formula holds numerically") {
  std::mt19937_64 rng(19);
  for (int g = 1; g <= 3; ++g)
    for (int trial = 0; trial < 4; ++trial) {
      const BranchPoints p(random_points(rng, g));
      const double r = thomae_residual(p);
      CHECK(r < 1e-8);
      CHECK(thomae_residual(p.shifted(-1.5)) < 1e-8);
    }
  const auto check = thomae_check(BranchPoints({0.0, 1.0, 2.0, 3.0, 4.0}));
  REQUIRE(check.lhs.size() == 4);
  CHECK(check.rhs[0] == doctest::Approx(32.0));
  CHECK(check.residual < 1e-12);
}
