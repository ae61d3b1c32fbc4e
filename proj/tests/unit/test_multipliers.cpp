#include <doctest.h>

#include "../common/oracles.hpp"
#include "fockgauss/errors.hpp"
#include "fockgauss/multipliers.hpp"

using namespace fockgauss;

TEST_CASE("multiplication by x is the tridiagonal Jacobi matrix") {
  const SmoothSymbol x = parse_symbol("x1", 1, 1);
  const GalerkinMatrix T = galerkin_multiplier(x, 8, 16, 1e-12);
  for (unsigned a = 0; a <= 8; ++a) {
    for (unsigned b = 0; b <= 8; ++b) {
      const double expected = a == b + 1 ? std::sqrt(double(a)) : b == a + 1 ? std::sqrt(double(b)) : 0.0;
      CHECK(std::abs(T.entries(a, b) - expected) < 1e-13);
    }
  }
}

TEST_CASE("plane wave column: E[e^{iaX} h_k(X)] = e^{-a^2/2} (ia)^k / sqrt(k!)") {
  for (double a : {0.5, -1.0, 2.0}) {
    const RealFunction u = [a](std::span<const double> x) { return std::polar(1.0, a * x[0]); };
    const GalerkinMatrix T = galerkin_multiplier(u, 1, 10, 64, 1e-12);
    for (unsigned k = 0; k <= 10; ++k) {
      const Complex expected = std::exp(-a * a / 2) * std::pow(Complex(0, a), int(k)) / std::sqrt(oracle::factorial(k));
      CHECK(std::abs(T.entries(k, 0) - expected) < 1e-12);
    }
  }
}

TEST_CASE("constant symbols give scaled identities; blocks and apply") {
  const GalerkinMatrix T = galerkin_multiplier(parse_symbol("3", 2, 0), 4, 8);
  CHECK((T.entries - 3.0 * Eigen::MatrixXcd::Identity(T.side(), T.side())).cwiseAbs().maxCoeff() < 1e-13);
  const GalerkinMatrix B = T.block(2);
  CHECK(B.side() == 6);
  SplitMix64 rng(51);
  const ComplexVector f = oracle::random_vector(rng, 2, 4, BasisTag::HermiteGamma);
  const ComplexVector g = T.apply(f);
  for (const auto& [beta, c] : f) CHECK(std::abs(g.at(beta) - 3.0 * c) < 1e-12);
  CHECK_THROWS_AS(T.block(5), std::out_of_range);
  CHECK_THROWS_AS(galerkin_multiplier(parse_symbol("exp(3*x1)", 1, 0), 8, 4, 1e-12), ResidualError);
}

TEST_CASE("Hilbertian Sobolev weights and operator norms") {
  CHECK(sobolev_gram_weight(MultiIndex{3}, 2) == doctest::Approx(1 + 3 + 6));
  CHECK(sobolev_gram_weight(MultiIndex{1, 1}, 1) == doctest::Approx(3));
  const GalerkinMatrix I = galerkin_multiplier(parse_symbol("1", 1, 0), 6, 8);
  CHECK(sobolev_operator_norm(I, 0, 0) == doctest::Approx(1.0));
  CHECK(sobolev_operator_norm(I, 1, 1) == doctest::Approx(1.0));
  // L2 -> L2 norm of multiplication by a unimodular symbol is at most 1.
  const GalerkinMatrix W = galerkin_multiplier(parse_symbol("exp(-i*x1)", 1, 0), 8, 32);
  CHECK(sobolev_operator_norm(W, 0, 0) <= 1.0 + 1e-12);
}

TEST_CASE("lemma33 bound of a plane wave") {
  const SmoothSymbol u = parse_symbol("exp(-2*i*x1)", 1, 2);
  std::vector<std::vector<double>> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back({-3.0 + 0.06 * k});
  CHECK(lemma33_bound(u, 2, grid) == doctest::Approx(1 + 2 + 4));
  CHECK_THROWS_AS(lemma33_bound(u, 3, grid), std::out_of_range);
}

TEST_CASE("mollification preserves constants and shrinks to the symbol") {
  const SmoothSymbol one = parse_symbol("1", 1, 0);
  const double x = 0.3;
  CHECK(std::abs(mollify(one, 0.5, 1).value(std::span<const double>(&x, 1)) - 1.0) < 1e-10);
  const SmoothSymbol u = parse_symbol("sin(x1)", 1, 0);
  double prev = 1.0;
  for (double r : {0.8, 0.4, 0.2, 0.1}) {
    const double err = std::abs(mollify(u, r, 0).value(std::span<const double>(&x, 1)) - std::sin(x));
    CHECK(err < prev);
    prev = err;
  }
  // Derivatives of the mollified symbol come from the kernel.
  const SmoothSymbol ur = mollify(u, 0.5, 1, 256);
  const double h = 1e-5, xp = x + h, xm = x - h;
  const Complex fd = (ur.value(std::span<const double>(&xp, 1)) - ur.value(std::span<const double>(&xm, 1))) / (2 * h);
  CHECK(std::abs(ur.derivative(MultiIndex{1}, std::span<const double>(&x, 1)) - fd) < 1e-6);
  CHECK_THROWS_AS(mollify(u, 0.0, 1), std::invalid_argument);
}
