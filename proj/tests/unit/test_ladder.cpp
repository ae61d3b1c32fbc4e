#include <doctest.h>

#include "../common/oracles.hpp"
#include "fockgauss/basis.hpp"
#include "fockgauss/ladder.hpp"

using namespace fockgauss;

TEST_CASE("canonical commutation on random exact vectors") {
  SplitMix64 root(11);
  for (int t = 0; t < 40; ++t) {
    SplitMix64 rng = root.split();
    const std::size_t n = 1 + t % 3;
    const ExactVector f = oracle::random_rational(rng, n, 5, BasisTag::HermiteGamma);
    const ExactVector g = oracle::random_rational(rng, n, 5, BasisTag::HermiteGamma);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(annihilate(j, create(j, f)) - create(j, annihilate(j, f)) == f);
      CHECK(coeff_inner(annihilate(j, f), g) == coeff_inner(f, create(j, g)));
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) CHECK(annihilate(j, create(k, f)) == create(k, annihilate(j, f)));
      }
    }
  }
}

TEST_CASE("position operator matches multiplication by x") {
  for (unsigned k = 0; k <= 7; ++k) {
    const ComplexVector e = ComplexVector::unit(MultiIndex{k}, BasisTag::HermiteGamma);
    for (double x : {-1.7, 0.0, 0.9, 2.4}) {
      CHECK(std::abs(eval_expansion(position(0, e), std::span<const double>(&x, 1)) - x * oracle::h(k, x)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(position(0, ComplexVector(1, BasisTag::FockMonomial)), std::invalid_argument);
  CHECK_THROWS_AS(annihilate(2, ComplexVector(2, BasisTag::HermiteGamma)), std::out_of_range);
}

TEST_CASE("derivatives of expansions agree with finite differences") {
  SplitMix64 rng(12);
  const ComplexVector f = oracle::random_vector(rng, 2, 5, BasisTag::HermiteGamma);
  const double x[2] = {0.3, -0.6};
  const double h = 1e-5;
  for (std::size_t j = 0; j < 2; ++j) {
    double xp[2] = {x[0], x[1]}, xm[2] = {x[0], x[1]};
    xp[j] += h;
    xm[j] -= h;
    const Complex fd = (eval_expansion(f, std::span<const double>(xp, 2)) - eval_expansion(f, std::span<const double>(xm, 2))) / (2 * h);
    const Complex exact = eval_expansion_derivative(f, MultiIndex::unit(2, j), std::span<const double>(x, 2));
    CHECK(std::abs(fd - exact) < 1e-7);
    CHECK(std::abs(eval_expansion(partial_alpha(MultiIndex::unit(2, j), f), std::span<const double>(x, 2)) - exact) < 1e-12);
  }
}

TEST_CASE("level projections split a vector and the OU operator is diagonal") {
  SplitMix64 rng(13);
  const ExactVector f = oracle::random_rational(rng, 2, 6, BasisTag::HermiteGamma);
  ExactVector sum(2, BasisTag::HermiteGamma), lf(2, BasisTag::HermiteGamma);
  for (unsigned k = 0; k <= 6; ++k) {
    const ExactVector p = level_project(k, f);
    sum += p;
    lf += Surd(-static_cast<long>(k)) * p;
  }
  CHECK(sum == f);
  CHECK(ou_apply(f) == lf);
}

TEST_CASE("exact and floating Bessel potentials agree") {
  SplitMix64 rng(14);
  const ExactVector f = oracle::random_rational(rng, 2, 6, BasisTag::HermiteGamma);
  for (int s = 0; s <= 3; ++s) {
    const ComplexVector a = to_complex(bessel_potential(s, f));
    const ComplexVector b = bessel_potential(double(s), to_complex(f));
    for (const auto& [beta, c] : b) CHECK(std::abs(a.at(beta) - c) < 1e-14);
    CHECK(inverse_bessel(s, bessel_potential(s, f)) == f);
  }
  CHECK_THROWS_AS(bessel_potential(-1.0, to_complex(f)), std::domain_error);
}

TEST_CASE("derivative decomposition on complex vectors") {
  SplitMix64 rng(15);
  const ComplexVector g = oracle::random_vector(rng, 2, 6, BasisTag::HermiteGamma);
  for (unsigned m = 0; m <= 3; ++m) {
    const auto parts = lemma44_decompose(g, m);
    const ComplexVector back = lemma44_reconstruct(parts, 2);
    for (const auto& beta : enumerate_up_to(2, 6)) CHECK(std::abs(back.at(beta) - g.at(beta)) < 1e-12);
    for (const auto& [alpha, ga] : parts) CHECK(alpha.degree() <= m);
  }
}
