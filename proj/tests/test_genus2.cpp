#include <doctest.h>

#include <cmath>

#include "agm/genus2.hpp"
#include "agm/sampling.hpp"
#include "agm/thomae.hpp"

using namespace agm;

TEST_CASE("quadruple constraints") {
  CHECK_NOTHROW(Genus2Quadruple{4.0, 2.0, 3.0, 2.5}.validate());
  CHECK_THROWS_AS((Genus2Quadruple{4.0, 2.0, 3.0, 3.5}.validate()), DomainError);
  CHECK_THROWS_AS((Genus2Quadruple{1.0, 1.0, 1.0, 1.0}.validate()), DomainError);
  // a00 a01 > a10 a11 fails
  CHECK_THROWS_AS((Genus2Quadruple{4.0, 1.0, 3.0, 2.0}.validate()), DomainError);
  const Genus2Quadruple q{4.0, 2.0, 3.0, 2.5};
  const auto back = Genus2Quadruple::from_means(q.to_means());
  CHECK(back.a01 == q.a01);
  CHECK(back.a10 == q.a10);
}

TEST_CASE("moduli of (4, 2, 3, 2.5)") {
  const Genus2Quadruple q{4.0, 2.0, 3.0, 2.5};
  const auto m = moduli_from_means(q);
  CHECK(m.k1 * m.k1 == doctest::Approx(5.75).epsilon(1e-14));
  CHECK(m.k2 * m.k2 == doctest::Approx(3.75).epsilon(1e-14));
  Sampler s(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = s.quadruple();
    const auto mm = moduli_from_means(a);
    const double l1s = mm.l1 * mm.l1, l2s = mm.l2 * mm.l2;
    CHECK((a.a00 + a.a01) == doctest::Approx((1 + l1s) / (1 - l1s) * mm.k1).epsilon(1e-13));
    CHECK((a.a00 - a.a01) == doctest::Approx((1 + l2s) / (1 - l2s) * mm.k2).epsilon(1e-13));
    CHECK(mm.l1 > 0.0);
    CHECK(mm.l1 < 1.0);
    CHECK(mm.l2 > 0.0);
    CHECK(mm.l2 < 1.0);
  }
}

TEST_CASE("branch points from means reproduce the means") {
  Sampler s(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = s.quadruple();
    const auto p = branch_points_from_means(a);
    CHECK(p.p(1) == 0.0);
    CHECK(ratio_residual(a, p) < 1e-11);
    // a -> c a leaves l_i fixed and scales k_i by c; every p_j is a ratio of degree 0
    const auto pc = branch_points_from_means(a.scaled(1.9));
    for (int j = 2; j <= 5; ++j) CHECK(pc.p(j) == doctest::Approx(p.p(j)).epsilon(1e-12));
    // Thomae data from p is proportional to a
    const auto back = initial_data(p);
    const auto means = a.to_means();
    for (std::size_t k = 1; k < 4; ++k)
      CHECK(back[k] / back[0] == doctest::Approx(means[k] / means[0]).epsilon(1e-12));
  }
}

TEST_CASE("closed forms agree with the iteration") {
  const Genus2Quadruple q1{4.0, 2.0, 3.0, 2.5};
  const auto c1 = closed_form_limit(q1);
  CHECK(c1.det_form == doctest::Approx(2.8285080548367578).epsilon(1e-12));
  CHECK(c1.expanded_form == doctest::Approx(c1.det_form).epsilon(1e-12));
  CHECK(generalized_agm(q1.to_means()) == doctest::Approx(c1.det_form).epsilon(1e-10));

  const Genus2Quadruple q2{5.0, 3.0, 4.5, 3.2};
  const auto c2 = closed_form_limit(q2);
  CHECK(c2.det_form == doctest::Approx(3.8790958156970197).epsilon(1e-12));
  CHECK(generalized_agm(q2.to_means()) == doctest::Approx(c2.det_form).epsilon(1e-10));

  Sampler s(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = s.quadruple();
    const auto c = closed_form_limit(a);
    CHECK(c.expanded_form == doctest::Approx(c.det_form).epsilon(1e-12));
    CHECK(generalized_agm(a.to_means()) == doctest::Approx(c.det_form).epsilon(1e-8));
    const auto cs = closed_form_limit(a.scaled(3.0));
    CHECK(cs.det_form == doctest::Approx(3.0 * c.det_form).epsilon(1e-11));
  }
}
