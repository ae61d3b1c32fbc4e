#include <doctest.h>

#include <numbers>

#include "../common/oracles.hpp"
#include "fockgauss/errors.hpp"
#include "fockgauss/norms.hpp"
#include "fockgauss/transforms.hpp"

using namespace fockgauss;

TEST_CASE("Gauss-Sobolev and Fock-Sobolev norms coincide under G") {
  SplitMix64 root(31);
  for (int t = 0; t < 20; ++t) {
    SplitMix64 rng = root.split();
    const ComplexVector f = oracle::random_vector(rng, 1 + t % 2, 6, BasisTag::HermiteGamma);
    for (unsigned m = 0; m <= 3; ++m) {
      for (auto c : {SobolevConvention::SumOfNorms, SobolevConvention::Hilbertian}) {
        CHECK(gauss_sobolev_norm(f, m, c) == doctest::Approx(fock_sobolev_norm(gauss_bargmann_coeff(f), m, c)).epsilon(1e-14));
      }
      // The l1 combination dominates the l2 one.
      CHECK(gauss_sobolev_norm(f, m, SobolevConvention::Hilbertian) <= gauss_sobolev_norm(f, m) * (1 + 1e-15));
    }
  }
}

TEST_CASE("seminorms on the Fock side against monomial differentiation") {
  SplitMix64 rng(32);
  const ComplexVector f = oracle::random_vector(rng, 2, 7, BasisTag::FockMonomial);
  for (const auto& alpha : enumerate_up_to(2, 3)) {
    CHECK(squared_seminorm(f, alpha) == doctest::Approx(fock_squared_seminorm_monomial(f, alpha)).epsilon(1e-13));
  }
}

TEST_CASE("weighted Fock norm of e_beta in one variable is sqrt((b+m)!/b!)") {
  for (unsigned b = 0; b <= 8; ++b) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double expected = std::sqrt(oracle::factorial(b + m) / oracle::factorial(b));
      CHECK(weighted_fock_norm(ComplexVector::unit(MultiIndex{b}, BasisTag::FockMonomial), m) == doctest::Approx(expected));
    }
  }
}

TEST_CASE("ratio extremes bound every sampled ratio") {
  SplitMix64 root(33);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (unsigned s = 1; s <= 2; ++s) {
      for (auto conv : {SobolevConvention::SumOfNorms, SobolevConvention::Hilbertian}) {
        const RatioExtremes ex = sobolev_bessel_ratio_extremes(n, 6, s, conv);
        CHECK(ex.min <= ex.max);
        CHECK(ex.gap <= 1e-6);
        double seen_max = 0.0;
        for (int t = 0; t < 300; ++t) {
          SplitMix64 rng = root.split();
          const ComplexVector f = oracle::random_vector(rng, n, 6, BasisTag::HermiteGamma, rng.uniform(0.05, 1.0));
          const double r = gauss_sobolev_norm(f, s, conv) / bessel_norm(f, s);
          CHECK(r >= ex.min * (1 - 1e-12));
          CHECK(r <= ex.max * (1 + 1e-12));
          seen_max = std::max(seen_max, r);
        }
        CHECK(seen_max >= 0.9 * ex.max);
      }
    }
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    const RatioExtremes ex = weighted_sobolev_ratio_extremes(n, 6, 2);
    for (int t = 0; t < 300; ++t) {
      SplitMix64 rng = root.split();
      const ComplexVector f = oracle::random_vector(rng, n, 6, BasisTag::FockMonomial, rng.uniform(0.05, 1.0));
      const double r = weighted_fock_norm(f, 2) / fock_sobolev_norm(f, 2);
      CHECK(r >= ex.min * (1 - 1e-9));
      CHECK(r <= ex.max * (1 + 1e-12));
    }
  }
}

TEST_CASE("classical Sobolev norm of a Gaussian") {
  // g = e^{-x^2}: |g|^2 = sqrt(pi/2), |g'|^2 = sqrt(pi/2).
  const DerivativeFunction g = [](const MultiIndex& a, std::span<const double> x) {
    const double v = std::exp(-x[0] * x[0]);
    return Complex(a[0] == 0 ? v : -2 * x[0] * v, 0.0);
  };
  const double root = std::pow(std::numbers::pi / 2, 0.25);
  CHECK(classical_sobolev_norm_dx(g, 1, 1, {32, 1.0, 0.0}, 1e-10).value == doctest::Approx(2 * root));
  CHECK(classical_sobolev_norm_dx(g, 1, 1, {32, 1.0, 0.0}, 1e-10, SobolevConvention::Hilbertian).value ==
        doctest::Approx(std::sqrt(2.0) * root));
  const DerivativeFunction wide = [](const MultiIndex&, std::span<const double> x) {
    return Complex(1.0 / (1.0 + x[0] * x[0]), 0.0);
  };
  CHECK_THROWS_AS((classical_sobolev_norm_dx(wide, 0, 1, {4, 1.0, 0.0}, 1e-12)), ResidualError);
}
