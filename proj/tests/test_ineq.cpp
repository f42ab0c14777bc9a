#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bent/geom_measure.hpp"
#include "bent/ineq.hpp"
#include "bent/state_zoo.hpp"

using namespace bent;

TEST_CASE("smolin overlap norm and remainder identity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::array<double, 4> th{u(rng), u(rng), u(rng), u(rng)};
    const double norm_sq = smolin_overlap_norm_sq(th);
    CHECK(norm_sq >= -1e-14);
    CHECK(norm_sq <= 1.0 + 1e-12);
    // the symmetric remainder completes the identity exactly
    CHECK(norm_sq + smolin_remainder_symmetric(th) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  // saturation at the trivial corner
  CHECK(smolin_overlap_norm_sq({0, 0, 0, 0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(smolin_remainder_symmetric({0, 0, 0, 0}) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("printed remainder differs generically, agrees when c4 = s4") {
  // the printed form has an s4 where the symmetric pattern has c4, so the
  // two coincide whenever cos(theta4) == sin(theta4)
  const std::array<double, 4> generic{0.3, 0.8, 1.1, 0.4};
  CHECK(std::abs(smolin_remainder_printed(generic) -
                 smolin_remainder_symmetric(generic)) > 1e-6);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const std::array<double, 4> th{u(rng), u(rng), u(rng), M_PI / 4.0};
    CHECK(smolin_remainder_printed(th) ==
          doctest::Approx(smolin_remainder_symmetric(th)).epsilon(1e-12));
  }
}

TEST_CASE("f_n bound and monotonicity") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, M_PI / 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> th(9);
    for (double& t : th) t = u(rng);
    double prev = 2.0;
    for (int n = 4; n <= 9; ++n) {
      const double f = f_n(std::vector<double>(th.begin(), th.begin() + n));
      CHECK(f <= 1.0 + 1e-12);
      CHECK(f >= -1e-14);
      CHECK(f <= prev + 1e-12);
      prev = f;
    }
  }
  // all-zero angles saturate the bound at every N
  CHECK(f_n({0, 0, 0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  // the symmetric point for N=4: first term 1/4, eight corrections 1/16
  CHECK(f_n({M_PI / 4, M_PI / 4, M_PI / 4, M_PI / 4}) ==
        doctest::Approx(0.75).epsilon(1e-14));
  // small N is evaluated but not bounded by 1
  CHECK(f_n({M_PI / 4}) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("psi_y closed form") {
  CHECK(psi_y_lambda_closed(1.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(psi_y_lambda_closed(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double y : {0.1, 0.35, 0.6, 0.9}) {
    const double closed = psi_y_lambda_closed(y);
    for (int n : {4, 5}) {
      const PureState psi = psi_y(n, y, PsiSign::plus, PsiType::u, 1);
      // iterative solver agrees
      CHECK(lambda_max(psi, {16, 5000, 1e-13, 0}).lambda_max ==
            doctest::Approx(closed).epsilon(1e-9));
      // the closed-form closest product is a stationary point achieving it
      const ProductState prod = psi_y_closest_product(y, n);
      const auto [lam, residual] = stationarity_residual(psi, prod);
      CHECK(lam == doctest::Approx(closed).epsilon(1e-12));
      CHECK(residual < 1e-12);
    }
  }
  CHECK_THROWS_AS(psi_y_lambda_closed(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(psi_y_lambda_closed(1.1), std::invalid_argument);
}

TEST_CASE("closest product head weight") {
  const double y = 0.5;
  const ProductState prod = psi_y_closest_product(y, 4);
  REQUIRE(prod.factors.size() == 4);
  const double p = y / (2.0 - y);
  CHECK(std::abs(prod.factors[0](0)) ==
        doctest::Approx(std::sqrt(p)).epsilon(1e-14));
  CHECK(std::abs(prod.factors[0](1)) ==
        doctest::Approx(std::sqrt(1.0 - p)).epsilon(1e-14));
  for (int q = 1; q < 4; ++q) {
    CHECK(std::abs(prod.factors[q](0) - cxd(1.0)) < 1e-15);
  }
}
