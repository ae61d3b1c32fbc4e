#include <doctest.h>

#include <limits>
#include <numbers>

#include "../common/oracles.hpp"
#include "fockgauss/errors.hpp"
#include "fockgauss/sphi.hpp"

using namespace fockgauss;

TEST_CASE("expected normalization constant") {
  CHECK(expected_kappa(1) == doctest::Approx(std::sqrt(2 / std::numbers::pi)));
  CHECK(expected_kappa(2) == doctest::Approx(2 / std::numbers::pi));
}

TEST_CASE("phi of a plane wave is a Gaussian exponential") {
  for (double a : {0.5, -1.0}) {
    const PhiFromSymbol phi([a](std::span<const double> x) { return std::polar(1.0, -a * x[0]); }, 1, 64, expected_kappa(1));
    for (Complex zeta : {Complex(0.2, -0.4), Complex(-1.1, 0.9)}) {
      CHECK(std::abs(phi(std::span<const Complex>(&zeta, 1)) - std::exp(a * zeta - a * a / 2)) < 1e-10);
    }
  }
}

TEST_CASE("factored matrix carries the i^{|a|-|b|} phases") {
  const GalerkinMatrix T = galerkin_multiplier(parse_symbol("sin(x1)", 1, 0), 5, 32);
  const GalerkinMatrix S = sphi_factored_matrix(T);
  CHECK(S.tag == BasisTag::FockMonomial);
  for (std::size_t a = 0; a < T.side(); ++a) {
    for (std::size_t b = 0; b < T.side(); ++b) {
      const int d = int(T.index[a].degree()) - int(T.index[b].degree());
      CHECK(std::abs(S.entries(a, b) - std::pow(Complex(0, 1), d) * T.entries(a, b)) < 1e-14);
    }
  }
}

TEST_CASE("factored S_phi with u = 1 is the identity") {
  SplitMix64 rng(61);
  const ComplexVector f = oracle::random_vector(rng, 2, 3, BasisTag::FockMonomial);
  const ComplexVector s = sphi_factored(parse_symbol("1", 2, 0), f, 5, 12);
  for (const auto& beta : enumerate_up_to(2, 5)) CHECK(std::abs(s.at(beta) - f.at(beta)) < 1e-13);
  CHECK_THROWS_AS(sphi_factored(parse_symbol("1", 2, 0), f, 2, 12), std::invalid_argument);
}

TEST_CASE("commutators of multiplication matrices and inverse guard") {
  const SmoothSymbol u = parse_symbol("exp(-i*x1)", 1, 0), v = parse_symbol("sin(x1)", 1, 0);
  const BlockResidual a = commutation_check(u, v, 8, 48);
  const BlockResidual b = commutation_check(v, u, 8, 48);
  CHECK(a.inner == doctest::Approx(b.inner));
  CHECK(a.inner <= a.full);
  std::vector<std::vector<double>> grid;
  for (int k = 0; k <= 400; ++k) grid.push_back({-4.0 + 0.02 * k});
  CHECK_THROWS_AS(invertibility_check(parse_symbol("x1", 1, 0), 6, 32, grid), PreconditionError);
  CHECK(invertibility_check(parse_symbol("2", 1, 0), 6, 32, grid).full < 1e-12);
}

TEST_CASE("truncation decay of the inner block") {
  std::vector<std::vector<double>> grid;
  for (int k = 0; k <= 1600; ++k) grid.push_back({-8.0 + 0.01 * k});
  const SmoothSymbol u = parse_symbol("2 + sin(x1)", 1, 0);
  double prev = std::numeric_limits<double>::infinity();
  for (unsigned N : {4u, 6u, 8u, 10u}) {
    const double r = invertibility_check(u, N, 64, grid).inner;
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev <= 1e-3);
  // Two plane waves: the commutator at least halves per step N -> N + 2.
  const SmoothSymbol a = parse_symbol("exp(-i*x1)", 1, 0), b = parse_symbol("exp(-2*i*x1)", 1, 0);
  double last = commutation_check(a, b, 4, 64).inner;
  for (unsigned N : {6u, 8u}) {
    const double r = commutation_check(a, b, N, 64).inner;
    CHECK(r <= 0.5 * last);
    last = r;
  }
}
