#include <doctest.h>

#include <cmath>

#include "agm/agm_core.hpp"
#include "agm/sampling.hpp"

using namespace agm;

namespace {

// Independent g = 1 oracle: a <- (a + b)/2, b <- sqrt(a b).
double classical_agm(double a, double b) {
  for (int k = 0; k < 40; ++k) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return a;
}

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

}  // namespace

TEST_CASE("bit index string layout and group law") {
  const BitIndex I = BitIndex::parse("01");
  CHECK(I.genus() == 2);
  CHECK(I.value() == 1);
  CHECK(I.component(1) == 0);
  CHECK(I.component(2) == 1);
  CHECK(I.to_string() == "01");
  CHECK((I ^ BitIndex::parse("11")).to_string() == "10");
  CHECK(BitIndex::parse("110").value() == 6);
  CHECK_THROWS_AS(I ^ BitIndex::parse("1"), DimensionError);
  CHECK_THROWS_AS(BitIndex::parse("012"), InputError);
  CHECK_THROWS_AS(BitIndex(2, 4), DimensionError);
}

TEST_CASE("mean vector rejects bad entries") {
  CHECK_THROWS_AS(MeanVector(2, {1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(MeanVector(1, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(MeanVector(1, {1.0, -2.0}), DomainError);
  CHECK_THROWS_AS(MeanVector(1, {1.0, std::nan("")}), DomainError);
}

TEST_CASE("quadratic form examples") {
  const MeanVector u(2, {1.5, 2.0, 3.0, 0.7});  // u00, u01, u10, u11
  CHECK(quadratic_form(BitIndex::parse("11"), u) == doctest::Approx((1.5 * 0.7 + 3.0 * 2.0) / 2).epsilon(1e-15));
  CHECK(quadratic_form(BitIndex::parse("00"), u) ==
        doctest::Approx((1.5 * 1.5 + 2.0 * 2.0 + 3.0 * 3.0 + 0.7 * 0.7) / 4).epsilon(1e-15));
  CHECK(quadratic_form(BitIndex::parse("01"), u) == doctest::Approx((1.5 * 2.0 + 0.7 * 3.0) / 2).epsilon(1e-15));
  CHECK(quadratic_form(BitIndex::parse("10"), u) == doctest::Approx((1.5 * 3.0 + 0.7 * 2.0) / 2).epsilon(1e-15));

  for (int g = 1; g <= 4; ++g) {
    const MeanVector c(g, std::vector<double>(index_count(g), 1.7));
    for (const BitIndex& I : all_indices(g)) CHECK(quadratic_form(I, c) == doctest::Approx(1.7 * 1.7));
  }

  const MeanVector v(1, {3.0, 5.0});
  CHECK(quadratic_form(BitIndex(1, 0), v) == doctest::Approx((9.0 + 25.0) / 2));
  CHECK_THROWS_AS(quadratic_form(BitIndex(1, 0), u), DimensionError);
}

TEST_CASE("agm step examples") {
  const MeanVector one = agm_step(MeanVector(1, {4.0, 1.0}));
  CHECK(one[0] == 2.5);
  CHECK(one[1] == 2.0);

  // F_I evaluated by hand at u = (2, 1, 1, 1)
  const MeanVector two = agm_step(MeanVector(2, {4.0, 1.0, 1.0, 1.0}));
  CHECK(two[0] == doctest::Approx(7.0 / 4).epsilon(1e-15));
  CHECK(two[1] == doctest::Approx(3.0 / 2).epsilon(1e-15));
  CHECK(two[2] == doctest::Approx(3.0 / 2).epsilon(1e-15));
  CHECK(two[3] == doctest::Approx(3.0 / 2).epsilon(1e-15));

  const double c = 3.37;
  const MeanVector fixed = agm_step(MeanVector(2, {c, c, c, c}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(rel(fixed[i], c) < 1e-15);
}

TEST_CASE("g = 1 step reproduces the classical recursion") {
  Sampler s(11);
  for (int k = 0; k < 50; ++k) {
    const double a = s.uniform(0.1, 10), b = s.uniform(0.1, 10);
    const MeanVector next = agm_step(MeanVector(1, {a * a, b * b}));
    CHECK(rel(next[0], (a * a + b * b) / 2) < 1e-15);
    CHECK(rel(next[1], a * b) < 1e-15);
  }
}

TEST_CASE("agm limit against the classical oracle") {
  // 30-digit reference: M(sqrt 2, 1) = 1.19814023473559220744
  const double oracle = classical_agm(std::sqrt(2.0), 1.0);
  CHECK(rel(oracle, 1.19814023473559220744) < 1e-15);
  const AgmTrace t = agm_limit(MeanVector(1, {std::sqrt(2.0), 1.0}));
  CHECK(rel(t.limit, oracle) < 1e-14);
  CHECK(rel(generalized_agm(MeanVector(1, {2.0, 1.0})), 1.45679103104690686919) < 1e-14);
}

TEST_CASE("constant input needs no iterations") {
  const AgmTrace t = agm_limit(MeanVector(3, std::vector<double>(8, 2.5)));
  CHECK(t.iterations() == 0);
  CHECK(t.limit == 2.5);
}

TEST_CASE("agm limit rejects out-of-range tolerances") {
  const MeanVector a(1, {2.0, 1.0});
  CHECK_THROWS_AS(agm_limit(a, 0.0), DomainError);
  CHECK_THROWS_AS(agm_limit(a, 1e-2), DomainError);
}

TEST_CASE("agm properties on random inputs") {
  Sampler s(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = 1 + trial % 4;
    const MeanVector a = s.mean_vector(g, 50.0);

    // monotone envelope
    const MeanVector next = agm_step(a);
    CHECK(next.max() <= a.max() * (1 + 1e-15));
    CHECK(next.min() >= a.min() * (1 - 1e-15));

    const AgmTrace t = agm_limit(a);
    for (const MeanVector& it : t.iterates) {
      CHECK(t.limit <= it.max() * (1 + 1e-15));
      CHECK(t.limit >= it.min() * (1 - 1e-15));
    }
    for (std::size_t k = 2; k < t.spreads.size(); ++k)
      if (t.spreads[k - 1] > 1e-14) CHECK(t.spreads[k] < t.spreads[k - 1]);

    // homogeneity
    const double c = s.uniform(0.01, 100.0);
    CHECK(rel(generalized_agm(a.scaled(c)), c * t.limit) < 1e-12);

    // translation by any J leaves the limit unchanged
    const BitIndex J(g, static_cast<std::uint32_t>(trial) % static_cast<std::uint32_t>(index_count(g)));
    CHECK(rel(generalized_agm(a.translated(J)), t.limit) < 1e-12);
  }
}

TEST_CASE("quadratic convergence for spread ratio at most 2") {
  Sampler s(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int g = 1 + trial % 4;
    const MeanVector a = s.mean_vector(g, 2.0);
    const AgmTrace t = agm_limit(a, 1e-13);
    int reached = -1;
    for (std::size_t k = 0; k < t.spreads.size(); ++k)
      if (t.spreads[k] < 1e-12) {
        reached = static_cast<int>(k);
        break;
      }
    CHECK(reached >= 0);
    CHECK(reached <= 8);
    for (std::size_t k = 1; k < t.spreads.size(); ++k)
      if (t.spreads[k - 1] > 1e-7) CHECK(t.spreads[k] <= 10.0 * t.spreads[k - 1] * t.spreads[k - 1]);
  }
}
