#include <doctest.h>

#include <numbers>

#include "../common/oracles.hpp"
#include "fockgauss/basis.hpp"
#include "fockgauss/quadrature.hpp"

using namespace fockgauss;

TEST_CASE("hermite recurrence matches the explicit polynomial sum") {
  for (double x : {-3.1, -1.0, 0.0, 0.25, 2.7}) {
    const auto v = hermite_values_1d(12, x);
    for (unsigned k = 0; k <= 12; ++k) CHECK(v[k] == doctest::Approx(oracle::h(k, x)).epsilon(1e-12));
  }
  const double x[2] = {0.4, -1.3};
  CHECK(hermite_eval(MultiIndex{3, 2}, x) == doctest::Approx(oracle::h(3, 0.4) * oracle::h(2, -1.3)));
  CHECK(hermite_tilde_eval(MultiIndex{2, 1}, x) == doctest::Approx(oracle::h_tilde(MultiIndex{2, 1}, x)));
}

TEST_CASE("hermite functions are orthonormal for the Gaussian measure") {
  const QuadratureRule g = gamma_rule(20, 1);
  for (unsigned j = 0; j <= 8; ++j) {
    for (unsigned k = 0; k <= 8; ++k) {
      const Complex v = integrate_gamma(
          [&](std::span<const double> x) { return Complex(oracle::h(j, x[0]) * oracle::h(k, x[0]), 0.0); }, g);
      CHECK(std::abs(v - Complex(j == k ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("tilde functions are orthonormal for Lebesgue measure") {
  const QuadratureRule leb = lebesgue_rule(24, 1, 2.0);
  for (unsigned j = 0; j <= 6; ++j) {
    for (unsigned k = 0; k <= 6; ++k) {
      const Complex v = integrate_lebesgue(
          [&](std::span<const double> x) {
            return Complex(hermite_tilde_eval(MultiIndex{j}, x) * hermite_tilde_eval(MultiIndex{k}, x), 0.0);
          },
          leb);
      CHECK(std::abs(v - Complex(j == k ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("Fock monomials and expansions") {
  const Complex z[2] = {{0.5, -0.2}, {1.1, 0.3}};
  CHECK(std::abs(fock_eval(MultiIndex{2, 3}, z) - oracle::e(MultiIndex{2, 3}, z)) < 1e-14);
  ComplexVector f(2, BasisTag::FockMonomial);
  f.set(MultiIndex{1, 0}, {2.0, 0.0});
  f.set(MultiIndex{0, 2}, {0.0, 1.0});
  CHECK(std::abs(eval_expansion(f, std::span<const Complex>(z, 2)) -
                 (2.0 * z[0] + Complex(0, 1) * z[1] * z[1] / std::sqrt(2.0))) < 1e-14);
  CHECK_THROWS_AS(eval_expansion(f, std::span<const double>()), std::invalid_argument);
}
