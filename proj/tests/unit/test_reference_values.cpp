// Small closed-form values for each module, one case per operation.

#include <doctest.h>

#include <numbers>

#include "../common/oracles.hpp"
#include "fockgauss/basis.hpp"
#include "fockgauss/ladder.hpp"
#include "fockgauss/multipliers.hpp"
#include "fockgauss/norms.hpp"
#include "fockgauss/quadrature.hpp"
#include "fockgauss/sphi.hpp"
#include "fockgauss/transforms.hpp"

using namespace fockgauss;
using Span = std::span<const double>;
using CSpan = std::span<const Complex>;

namespace {
ComplexVector unit_h(std::initializer_list<unsigned> b) { return ComplexVector::unit(MultiIndex(b), BasisTag::HermiteGamma); }
ComplexVector unit_e(std::initializer_list<unsigned> b) { return ComplexVector::unit(MultiIndex(b), BasisTag::FockMonomial); }
const double kRootTwo = std::sqrt(2.0);
}  // namespace

TEST_CASE("index enumeration and combinatorics") {
  CHECK(enumerate_up_to(3, 4).size() == 35);
  CHECK(multi_factorial(MultiIndex{0, 0, 0}) == 1);
  CHECK(multi_factorial(MultiIndex{4}) == 24);
  CHECK(falling_product(MultiIndex{3}, MultiIndex{2}) == 6);
  CHECK(falling_product(MultiIndex{5, 2}, MultiIndex{0, 0}) == 1);
  CHECK(leq(MultiIndex{1, 0}, MultiIndex{1, 2}));
  CHECK_FALSE(leq(MultiIndex{2, 0}, MultiIndex{1, 2}));
}

TEST_CASE("basis point values") {
  const double t = 1.0;
  CHECK(hermite_eval(MultiIndex{1}, Span(&t, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(hermite_eval(MultiIndex{2}, Span(&t, 1))) < 1e-15);
  const Complex z[2] = {{0, 1}, {2, 0}};
  CHECK(std::abs(fock_eval(MultiIndex{1, 1}, z) - Complex(0, 2)) < 1e-15);
  const double zero = 0.0;
  CHECK(hermite_tilde_eval(MultiIndex{0}, Span(&zero, 1)) == doctest::Approx(std::pow(2 / std::numbers::pi, 0.25)));
  ComplexVector f = unit_h({0});
  f.set(MultiIndex{2}, {1.0, 0.0});
  CHECK(std::abs(eval_expansion(f, Span(&t, 1)) - 1.0) < 1e-15);
  ComplexVector g(1, BasisTag::HermiteGamma);
  g.set(MultiIndex{0}, {2.0, 0.0});
  g.set(MultiIndex{1}, {0.0, 1.0});
  CHECK(std::abs(coeff_inner(g, unit_h({1})) - Complex(0, 1)) < 1e-15);
}

TEST_CASE("ladder reference values") {
  CHECK(annihilate(0, unit_h({1})) == unit_h({0}));
  CHECK(annihilate(0, unit_h({0})).empty());
  CHECK(std::abs(annihilate(0, unit_e({3})).at(MultiIndex{2}) - std::sqrt(3.0)) < 1e-15);
  CHECK(create(0, unit_e({0})) == unit_e({1}));
  CHECK(std::abs(create(0, unit_h({1})).at(MultiIndex{2}) - kRootTwo) < 1e-15);
  const ComplexVector x1 = position(0, unit_h({1}));
  CHECK(std::abs(x1.at(MultiIndex{2}) - kRootTwo) < 1e-15);
  CHECK(std::abs(x1.at(MultiIndex{0}) - 1.0) < 1e-15);
  CHECK(std::abs(partial_alpha(MultiIndex{2}, unit_h({2})).at(MultiIndex{0}) - kRootTwo) < 1e-15);
  CHECK(partial_alpha(MultiIndex{1, 1}, unit_e({1, 1})) == unit_e({0, 0}));
  CHECK(std::abs(ou_apply(unit_h({2, 1})).at(MultiIndex{2, 1}) + 3.0) < 1e-15);
  CHECK(std::abs(inverse_bessel(2.0, unit_h({1})).at(MultiIndex{1}) - 2.0) < 1e-15);
  const auto parts = lemma44_decompose(unit_h({3}), 0);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == MultiIndex{0});
}

TEST_CASE("norm reference values") {
  CHECK(gauss_sobolev_norm(unit_h({0}), 1) == doctest::Approx(1.0));
  CHECK(gauss_sobolev_norm(unit_h({1}), 1) == doctest::Approx(2.0));
  CHECK(gauss_sobolev_norm(unit_h({2}), 1) == doctest::Approx(1 + kRootTwo));
  CHECK(fock_sobolev_norm(unit_e({1}), 1) == doctest::Approx(2.0));
  CHECK(fock_sobolev_norm(unit_e({0}), 3) == doctest::Approx(1.0));
  CHECK(weighted_fock_norm(unit_e({0}), 1) == doctest::Approx(1.0));
  CHECK(weighted_fock_norm(unit_e({1}), 1) == doctest::Approx(kRootTwo));
  CHECK(bessel_norm(unit_h({2, 1}), 2.0) == doctest::Approx(4.0));
  SplitMix64 rng(71);
  const ComplexVector f = oracle::random_vector(rng, 2, 5, BasisTag::HermiteGamma);
  double prev = 0.0;
  for (double s = 0.0; s <= 4.0; s += 0.25) {
    const double b = bessel_norm(f, s);
    CHECK(b >= prev);
    prev = b;
  }
  const DerivativeFunction h1 = [](const MultiIndex& a, Span x) {
    return a[0] == 0 ? Complex(hermite_tilde_eval(MultiIndex{1}, x)) : Complex(0.0);
  };
  CHECK(classical_sobolev_norm_dx(h1, 0, 1, {24, 2.0, 0.0}, 1e-12).value == doctest::Approx(1.0));
}

TEST_CASE("quadrature reference values") {
  const Rule1D one = gauss_hermite_gamma(1);
  CHECK(one.nodes[0] == doctest::Approx(0.0));
  CHECK(one.weights[0] == doctest::Approx(1.0));
  const Rule1D two = gauss_hermite_gamma(2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0));
  CHECK(two.weights[1] == doctest::Approx(0.5));
  const QuadratureRule g22 = gamma_rule(2, 2);
  CHECK(g22.size() == 4);
  for (double w : g22.weights()) CHECK(w == doctest::Approx(0.25));
  const QuadratureRule g3 = gamma_rule(3, 2);
  CHECK(integrate_gamma([](Span x) { return Complex(x[0] * x[0] * x[1] * x[1]); }, g3).real() == doctest::Approx(1.0));
  const QuadratureRule g20 = gamma_rule(20, 1);
  for (Complex z : {Complex(1.5, 0.5), Complex(-0.3, 1.9)}) {
    const Complex v = integrate_gamma([z](Span x) { return std::exp(x[0] * z); }, g20);
    CHECK(std::abs(v - std::exp(z * z / 2.0)) < 1e-10);
  }
  const QuadratureRule s = scaled_gaussian_rule(12, 1, 2.0);
  CHECK(integrate_scaled_gaussian([](Span) { return Complex(1.0); }, s).real() == doctest::Approx(std::sqrt(std::numbers::pi / 2)));
  CHECK(std::abs(integrate_scaled_gaussian([](Span x) { return Complex(x[0]); }, s)) < 1e-15);
  CHECK(integrate_scaled_gaussian([](Span x) { return Complex(x[0] * x[0]); }, s).real() ==
        doctest::Approx(std::sqrt(std::numbers::pi / 2) / 4));
  const QuadratureRule lam = lambda_rule(8, 1);
  CHECK(integrate_lambda([](CSpan z) { return std::norm(z[0]) * Complex(1.0); }, lam).real() == doctest::Approx(1.0));
}

TEST_CASE("transform reference values") {
  const QuadratureRule g = gamma_rule(24, 1);
  for (Complex z : {Complex(0.4, 1.0), Complex(-1.5, 0.2)}) {
    CHECK(std::abs(gauss_bargmann_integral([](Span) { return Complex(1.0); }, CSpan(&z, 1), g) - 1.0) < 1e-12);
  }
  const QuadratureRule lam = lambda_rule(24, 1, 1.5, 0.5);
  const double x = 0.6;
  CHECK(std::abs(inverse_gauss_bargmann_integral([](CSpan) { return Complex(1.0); }, Span(&x, 1), lam) - 1.0) < 1e-9);
  const RealFunction id = [](Span t) { return Complex(t[0]); };
  CHECK(dilate_half(id)(Span(&x, 1)).real() == doctest::Approx(0.3));
  CHECK(dilate_half(dilate_half(id))(Span(&x, 1)).real() == doctest::Approx(0.15));
  const double zero = 0.0;
  CHECK(gaussian_weight_mult([](Span) { return Complex(1.0); }, 1)(Span(&zero, 1)).real() ==
        doctest::Approx(std::pow(std::numbers::pi / 2, 0.25)));
  const QuadratureRule lp = lambda_rule(24, 1);
  const Complex z(0.5, -0.7);
  CHECK(std::abs(fock_project([](CSpan w) { return std::conj(w[0]); }, CSpan(&z, 1), lp)) < 1e-10);
  CHECK(std::abs(fock_project([](CSpan) { return Complex(1.0); }, CSpan(&z, 1), lp) - 1.0) < 1e-10);
  const ComplexVector r = rotate_i(unit_e({3}), 1);
  CHECK(std::abs(r.at(MultiIndex{3}) - Complex(0, -1)) < 1e-15);
  // W_b W_{-b} = I and W_b 1 at z = b equals e^{b^2/2}.
  const double b = 0.8, mb = -0.8;
  const ComplexFunction f = [](CSpan w) { return w[0] * w[0] + 1.0; };
  const ComplexFunction back = [&](CSpan w) { return weyl_eval(Span(&mb, 1), f, w); };
  CHECK(std::abs(weyl_eval(Span(&b, 1), back, CSpan(&z, 1)) - f(CSpan(&z, 1))) < 1e-13);
  const Complex zb(b, 0.0);
  CHECK(std::abs(weyl_eval(Span(&b, 1), [](CSpan) { return Complex(1.0); }, CSpan(&zb, 1)) - std::exp(b * b / 2)) < 1e-13);
  const WeylExpansion w = weyl_coeff(Span(&b, 1), unit_e({0}), 40);
  for (unsigned k = 0; k <= 10; ++k) {
    CHECK(std::abs(w.value.at(MultiIndex{k}) - std::exp(-b * b / 2) * std::pow(b, k) / std::sqrt(oracle::factorial(k))) < 1e-14);
  }
  const double t = 0.0;
  CHECK(verify_translation_identity(Span(&t, 1), unit_h({1}), {{0.3}, {-1.0}}, lambda_rule(24, 1, 1.5, 1.0)) < 1e-9);
}

TEST_CASE("operator norm reference values") {
  const GalerkinMatrix I = galerkin_multiplier(parse_symbol("1", 1, 0), 6, 8);
  CHECK(sobolev_operator_norm(I, 1, 0) == doctest::Approx(1.0));
  // Multiplication by x from W^{2,1} to L^2: finite sections grow, but slower than N.
  const GalerkinMatrix X10 = galerkin_multiplier(parse_symbol("x1", 1, 1), 10, 16);
  const GalerkinMatrix X20 = galerkin_multiplier(parse_symbol("x1", 1, 1), 20, 24);
  const double a = sobolev_operator_norm(X10, 1, 0), b = sobolev_operator_norm(X20, 1, 0);
  CHECK(b > a);
  CHECK(b / a < 2.0);
  std::vector<std::vector<double>> grid;
  for (int k = 0; k <= 700; ++k) grid.push_back({-3.5 + 0.01 * k});
  CHECK(lemma33_bound(parse_symbol("3", 1, 1), 1, grid) == doctest::Approx(3.0));
  CHECK(lemma33_bound(parse_symbol("sin(x1)", 1, 1), 1, grid) == doctest::Approx(2.0).epsilon(1e-4));
  const SmoothSymbol xr = mollify(parse_symbol("x1", 1, 0), 0.5, 1, 256);
  const double p = 1.3;
  CHECK(std::abs(xr.value(Span(&p, 1)) - p) < 1e-10);
  double prev = 1.0;
  for (double r : {1.0, 0.5, 0.25, 0.125}) {
    const double e = std::abs(mollify(parse_symbol("sin(x1)", 1, 0), r, 0).value(Span(&p, 1)) - std::sin(p));
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("finite-section norm quantities") {
  const Theorem36Quantities one = theorem36_quantities(parse_symbol("1", 1, 1), 1, 8, 32);
  CHECK(one.lhs == doctest::Approx(1.0));
  CHECK(one.rhs == doctest::Approx(1.0));
  double lo = 1e9, hi = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    const Theorem36Quantities q = theorem36_quantities(parse_symbol("exp(i*" + std::to_string(a) + "*x1)", 1, 1), 1, 10, 48);
    CHECK(std::isfinite(q.lhs));
    CHECK(std::isfinite(q.rhs));
    lo = std::min(lo, q.lhs / q.rhs);
    hi = std::max(hi, q.lhs / q.rhs);
  }
  CHECK(lo > 0.1);
  CHECK(hi < 10.0);
}

TEST_CASE("phi and S_phi reference values") {
  const SmoothSymbol one = parse_symbol("1", 1, 0);
  const Complex zero(0.0, 0.0);
  CHECK(std::abs(phi_from_symbol(one, CSpan(&zero, 1), 48, 1.0) - std::sqrt(std::numbers::pi / 2)) < 1e-12);
  const Complex zeta(0.7, -0.4);
  CHECK(std::abs(phi_from_symbol(one, CSpan(&zeta, 1), 48, expected_kappa(1)) - 1.0) < 1e-10);
  // phi = 1 reproduces holomorphic polynomials.
  const QuadratureRule lam = lambda_rule(32, 1, 1.0, 1.0);
  const ComplexFunction unit_phi = [](CSpan) { return Complex(1.0); };
  for (unsigned k = 0; k <= 3; ++k) {
    const ComplexFunction e = [k](CSpan w) { return oracle::e(MultiIndex{k}, w); };
    CHECK(std::abs(sphi_direct(unit_phi, e, CSpan(&zeta, 1), lam) - oracle::e(MultiIndex{k}, CSpan(&zeta, 1))) < 1e-8);
  }
  const SmoothSymbol wave = parse_symbol("exp(-i*x1)", 1, 0);
  for (Complex z : {Complex(0.2, 0.3), Complex(-1.0, 0.0)}) {
    CHECK(std::abs(phi_from_symbol(wave, CSpan(&z, 1), 64, expected_kappa(1)) - std::exp(z - 0.5)) < 1e-10);
  }
}
