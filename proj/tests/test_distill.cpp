#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bent/distill.hpp"
#include "bent/spectral.hpp"
#include "bent/state_zoo.hpp"
#include "bent/tensor_core.hpp"

using namespace bent;

namespace {
// expectation-value oracle via explicit basis states and matrix products
DepolarizedCoeffs depolarize_oracle(const DensityMatrix& rho) {
  const int n = rho.n_parties;
  const std::vector<PureState> basis = ghz_basis(n);
  auto expect = [&](const PureState& v) {
    return (v.amps.adjoint() * rho.mat * v.amps)(0).real();
  };
  DepolarizedCoeffs c;
  c.n_parties = n;
  c.lambda0_plus = expect(basis[0]);
  c.lambda0_minus = expect(basis[1]);
  const long half = dim_of(n) / 2;
  c.lambdas = Eigen::VectorXd(half - 1);
  for (long j = 1; j < half; ++j)
    c.lambdas(j - 1) = 0.5 * (expect(basis[2 * j]) + expect(basis[2 * j + 1]));
  return c;
}

DensityMatrix random_mixed(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const long d = dim_of(n);
  Eigen::MatrixXcd m(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) m(r, c) = cxd(g(rng), g(rng));
  Eigen::MatrixXcd psd = m * m.adjoint();
  psd /= psd.trace().real();
  return {n, psd};
}
}  // namespace

TEST_CASE("ghz_basis") {
  for (int n : {2, 4, 5}) {
    const auto basis = ghz_basis(n);
    const long d = dim_of(n);
    REQUIRE((long)basis.size() == d);
    // orthonormal and complete
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        const double expect = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(overlap(basis[i], basis[j]) - expect) < 1e-14);
      }
    // index 0 is GHZ+
    CHECK((basis[0].amps - ghz(n).amps).norm() < 1e-15);
    // index 2j+s has support on j and its complement only
    for (long j = 0; j < d / 2; ++j)
      for (int s : {0, 1}) {
        const Eigen::VectorXcd& a = basis[2 * j + s].amps;
        CHECK(std::abs(std::abs(a(j)) - 1.0 / std::sqrt(2.0)) < 1e-14);
        CHECK(std::abs(std::abs(a(d - 1 - j)) - 1.0 / std::sqrt(2.0)) < 1e-14);
      }
  }
  CHECK_THROWS_AS(ghz_basis(1), std::invalid_argument);
  CHECK_THROWS_AS(ghz_basis(13), std::invalid_argument);
}

TEST_CASE("depolarize matches the expectation oracle") {
  std::mt19937_64 rng(8);
  for (int n : {3, 4, 5}) {
    for (int trial = 0; trial < 4; ++trial) {
      const DensityMatrix rho = random_mixed(n, rng);
      const DepolarizedCoeffs fast = depolarize(rho);
      const DepolarizedCoeffs slow = depolarize_oracle(rho);
      CHECK(fast.lambda0_plus ==
            doctest::Approx(slow.lambda0_plus).epsilon(1e-12));
      CHECK(fast.lambda0_minus ==
            doctest::Approx(slow.lambda0_minus).epsilon(1e-12));
      CHECK((fast.lambdas - slow.lambdas).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(fast.normalization() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("depolarize of smolin") {
  const DepolarizedCoeffs c = depolarize(smolin());
  CHECK(c.lambda0_plus == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(c.lambda0_minus == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(delta(c) == doctest::Approx(0.25).epsilon(1e-13));
  // the three even-weight pair indices carry 1/8 each, the rest 0
  // (j indexes the flipped-party pattern over parties 1..3)
  for (long j = 1; j < 8; ++j) {
    const int popcount = __builtin_popcountl(j);
    const double expect = (popcount == 2) ? 0.125 : 0.0;
    CHECK(c.lambdas(j - 1) == doctest::Approx(expect).epsilon(1e-13));
  }
  // the 1:3 splits (popcount(j)=3, i.e. j=7, plus weight-1 js) violate
  const NondistillableResult nd = nondistillable_all_partitions(c);
  CHECK_FALSE(nd.holds);
  REQUIRE(nd.violating_j.has_value());
  CHECK(*nd.violating_j == 1);
}

TEST_CASE("depolarize of dur") {
  for (int n : {4, 5}) {
    for (double x : {0.3, 0.6}) {
      const DepolarizedCoeffs c = depolarize(dur(n, x));
      // GHZ carries x onto lambda0+; every u_k, v_k is orthogonal to both
      // GHZ+/- so lambda0- stays 0
      CHECK(delta(c) == doctest::Approx(x).epsilon(1e-12));
      CHECK(c.lambda0_plus == doctest::Approx(x).epsilon(1e-12));
      CHECK(c.lambda0_minus == doctest::Approx(0.0).epsilon(1e-12));
      // each u_k/v_k contributes (1-x)/(2N) onto its own flip pattern
      int weight_one_js = 0;
      for (long j = 1; j < dim_of(n) / 2; ++j) {
        const int pop = __builtin_popcountl(j);
        const double expect =
            (pop == 1 || pop == n - 1) ? (1.0 - x) / (2.0 * n) : 0.0;
        CHECK(c.lambdas(j - 1) == doctest::Approx(expect).epsilon(1e-12));
        if (pop == 1) ++weight_one_js;
      }
      CHECK(weight_one_js == n - 1);
      // nondistillable iff 2(1-x)/(2N) >= x fails somewhere; the all-zero
      // lambda at a weight-2 pattern always violates for x > 0
      CHECK_FALSE(nondistillable_all_partitions(c).holds);
    }
  }
}

TEST_CASE("to_density round trip") {
  std::mt19937_64 rng(31);
  for (int n : {3, 4}) {
    const DepolarizedCoeffs c = depolarize(random_mixed(n, rng));
    const DensityMatrix rho = to_density(c);
    validate_density(rho);
    const DepolarizedCoeffs back = depolarize(rho);
    CHECK(back.lambda0_plus == doctest::Approx(c.lambda0_plus).epsilon(1e-13));
    CHECK(back.lambda0_minus ==
          doctest::Approx(c.lambda0_minus).epsilon(1e-13));
    CHECK((back.lambdas - c.lambdas).cwiseAbs().maxCoeff() < 1e-13);
    // normal form: diagonal except the single GHZ coherence
    const long d = dim_of(n);
    for (long r = 0; r < d; ++r)
      for (long col = 0; col < d; ++col) {
        if (r == col) continue;
        if ((r == 0 && col == d - 1) || (r == d - 1 && col == 0)) continue;
        CHECK(std::abs(rho.mat(r, col)) < 1e-14);
      }
    CHECK(std::abs(rho.mat(0, d - 1) -
                   cxd(0.5 * (c.lambda0_plus - c.lambda0_minus))) < 1e-13);
  }
}

TEST_CASE("nondistillability predicate and boundary") {
  // hand-built coefficients: N=4, Delta = 0.1, all lambda_j = 0.05
  DepolarizedCoeffs c;
  c.n_parties = 4;
  c.lambdas = Eigen::VectorXd::Constant(7, 0.05);
  const double rest = 1.0 - 2.0 * c.lambdas.sum();
  c.lambda0_plus = (rest + 0.1) / 2.0;
  c.lambda0_minus = (rest - 0.1) / 2.0;
  CHECK(c.normalization() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(nondistillable_all_partitions(c).holds);  // 2*0.05 = 0.1 = Delta

  c.lambdas(3) = 0.049;  // tip one partition below the line
  const NondistillableResult nd = nondistillable_all_partitions(c);
  CHECK_FALSE(nd.holds);
  CHECK(*nd.violating_j == 4);

  // orientation: predicate uses |Delta|
  std::swap(c.lambda0_plus, c.lambda0_minus);
  c.lambdas(3) = 0.05;
  CHECK(nondistillable_all_partitions(c).holds);

  CHECK(max_delta_nondistillable(4) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(max_delta_nondistillable(8) ==
        doctest::Approx(std::ldexp(1.0, -7)).epsilon(1e-15));
}

TEST_CASE("nondistillable implies PPT across every split of the normal form") {
  // saturating configuration: lambda_j = Delta/2 everywhere
  for (int n : {3, 4}) {
    const long half = dim_of(n) / 2;
    DepolarizedCoeffs c;
    c.n_parties = n;
    const double d0 = max_delta_nondistillable(n);
    c.lambdas = Eigen::VectorXd::Constant(half - 1, d0 / 2.0);
    const double rest = 1.0 - 2.0 * c.lambdas.sum();
    c.lambda0_plus = (rest + d0) / 2.0;
    c.lambda0_minus = (rest - d0) / 2.0;
    REQUIRE(nondistillable_all_partitions(c).holds);
    const DensityMatrix rho = to_density(c);
    for (long j = 1; j < half; ++j) {
      CHECK(min_pt_eigenvalue(rho, split_for_j(n, j)) >= -1e-12);
    }
  }
}

TEST_CASE("split_for_j") {
  const PartySplit s1 = split_for_j(4, 1);  // j=1 flips party 3
  CHECK(s1.side_b == std::set<int>{3});
  CHECK(s1.side_a == std::set<int>{0, 1, 2});
  const PartySplit s5 = split_for_j(4, 5);  // bits 2^2+2^0 -> parties 1 and 3
  CHECK(s5.side_b == std::set<int>{1, 3});
  CHECK_THROWS_AS(split_for_j(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(split_for_j(4, 8), std::invalid_argument);
}

TEST_CASE("bell thresholds and consistency report") {
  CHECK(bell_violation_threshold(4, BellInequalityKind::two_setting) ==
        doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));
  CHECK(bell_violation_threshold(4, BellInequalityKind::three_setting) ==
        doctest::Approx(std::sqrt(3.0) * std::pow(2.0 / 3.0, 4)).epsilon(1e-14));
  CHECK(bell_violation_threshold(4, BellInequalityKind::functional) ==
        doctest::Approx(2.0 * std::pow(2.0 / M_PI, 4)).epsilon(1e-14));

  const auto rows = consistency_report(4, 12);
  CHECK(rows.size() == 3 * 9);
  for (const auto& row : rows) {
    CHECK(row.bound == max_delta_nondistillable(row.n_parties));
    CHECK(row.threshold ==
          bell_violation_threshold(row.n_parties, row.kind));
    // every Bell threshold sits above the nondistillability bound:
    // violation without distillability is possible
    CHECK(row.threshold_exceeds_bound);
    CHECK(row.threshold > row.bound);
  }
  CHECK_THROWS_AS(consistency_report(3, 12), std::invalid_argument);
}
