#include <doctest.h>

#include "fockgauss/coefficients.hpp"
#include "fockgauss/exact.hpp"

using namespace fockgauss;

TEST_CASE("square roots reduce to square-free radicands") {
  const Surd r = Surd::sqrt_of(12);
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == 3);
  CHECK(r.terms().begin()->second == 2);
  CHECK(Surd::sqrt_of(9) == Surd(3L));
  CHECK(Surd::sqrt_of(0).is_zero());
  CHECK((Surd::sqrt_of(6) * Surd::sqrt_of(6)) == Surd(6L));
  CHECK((Surd::sqrt_of(2) * Surd::sqrt_of(3)) == Surd::sqrt_of(6));
  CHECK_FALSE(Surd::sqrt_of(2).is_rational());
}

TEST_CASE("arithmetic is exact and cancels to zero") {
  const Surd a = Surd(Rational(1, 3)) + Surd::sqrt_of(5);
  const Surd b = a - Surd::sqrt_of(5);
  CHECK(b.is_rational());
  CHECK(b.rational_part() == Rational(1, 3));
  CHECK((a - a).is_zero());
  CHECK((a * a).to_double() == doctest::Approx(std::pow(1.0 / 3 + std::sqrt(5.0), 2)));
  CHECK((Surd(Rational(3, 4)) / Rational(3, 2)) == Surd(Rational(1, 2)));
  CHECK(-Surd(2L) == Surd(-2L));
}

TEST_CASE("unreduced rationals compare equal to their reduced form") {
  mpq_class two_fourths(2, 4);  // gmpxx leaves this unreduced
  CHECK(Surd(two_fourths) == Surd(Rational(1, 2)));
  ExactVector u(1, BasisTag::HermiteGamma), v(1, BasisTag::HermiteGamma);
  u.set(MultiIndex{0}, Surd(two_fourths));
  v.set(MultiIndex{0}, Surd(Rational(1, 2)));
  CHECK(u == v);
  CHECK((Surd(two_fourths) - Surd(Rational(1, 2))).is_zero());
}

TEST_CASE("coefficient vectors drop exact zeros and check compatibility") {
  ExactVector f(2, BasisTag::HermiteGamma);
  f.add(MultiIndex{1, 0}, Surd(1L));
  f.add(MultiIndex{1, 0}, Surd(-1L));
  CHECK(f.empty());
  const ExactVector g = ExactVector::unit(MultiIndex{0, 1}, BasisTag::FockMonomial);
  CHECK_THROWS_AS(coeff_inner(f, g), std::invalid_argument);
  CHECK_THROWS_AS((f.set(MultiIndex{1}, Surd(1L))), std::invalid_argument);
}
