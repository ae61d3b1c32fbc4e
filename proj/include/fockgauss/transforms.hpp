#pragma once

// G (Gauss-Bargmann), B (Bargmann), the bridging maps M, C_{1/2}, C_{±i}, the
// Fock projection P and Weyl translations W_b. Coefficient forms are exact
// re-indexings; integral forms are quadratures of the defining kernels.

#include <complex>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "fockgauss/coefficients.hpp"
#include "fockgauss/norms.hpp"
#include "fockgauss/quadrature.hpp"

namespace fockgauss {

/// G h_β = e_β: same coefficients, Fock tag.
template <class S>
CoefficientVector<S> gauss_bargmann_coeff(const CoefficientVector<S>& f) {
  if (f.tag() != BasisTag::HermiteGamma) throw std::invalid_argument("gauss_bargmann_coeff: needs Hermite tag");
  return f.retagged(BasisTag::FockMonomial);
}

template <class S>
CoefficientVector<S> inverse_gauss_bargmann_coeff(const CoefficientVector<S>& g) {
  if (g.tag() != BasisTag::FockMonomial) throw std::invalid_argument("inverse_gauss_bargmann_coeff: needs Fock tag");
  return g.retagged(BasisTag::HermiteGamma);
}

/// Gf(z) = ∫ f(x) e^{x·z - z·z/2} dγ(x); gamma rule.
Complex gauss_bargmann_integral(const RealFunction& f, std::span<const Complex> z, const QuadratureRule& rule);

/// G⁻¹g(x) = ∫ g(z) e^{x·z̄ - z̄·z̄/2} dλ(z); lambda rule. The rule
/// lambda_rule(count, n, 1.5, 0.5) matches the kernel's growth.
Complex inverse_gauss_bargmann_integral(const ComplexFunction& g, std::span<const double> x,
                                        const QuadratureRule& rule);

/// G⁻¹ with g sampled once on the rule nodes, for evaluation at many x.
class TabulatedInverseGaussBargmann {
 public:
  TabulatedInverseGaussBargmann(const ComplexFunction& g, const QuadratureRule& rule);
  Complex operator()(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<Complex> z_;       // node points, row-major size x n
  std::vector<Complex> values_;  // g(z) e^{-z̄·z̄/2}
  std::vector<double> weights_;
};

/// Bf(z) = (2/π)^{n/4} ∫ f(x) e^{2x·z - x·x - z·z/2} dx; Lebesgue rule
/// (lebesgue_rule(count, n, 2.0) suits the h̃ family).
Complex bargmann_integral(const RealFunction& f, std::span<const Complex> z, const QuadratureRule& rule);

/// C_{1/2} f(x) = f(x/2).
RealFunction dilate_half(RealFunction f);

/// M f(x) = (π/2)^{n/4} e^{|x|²/4} f(x).
RealFunction gaussian_weight_mult(RealFunction f, std::size_t n);

/// max_z |Bf(z) - G(M C_{1/2} f)(z)|.
double verify_prop22(const RealFunction& f, const std::vector<std::vector<Complex>>& zs, const QuadratureRule& gamma,
                     const QuadratureRule& lebesgue);

/// Pf(z) = ∫ f(w) e^{z·w̄} dλ(w).
Complex fock_project(const ComplexFunction& f, std::span<const Complex> z, const QuadratureRule& rule);

/// C_{±i}: coefficient at β times (±i)^{|β|}.
ComplexVector rotate_i(const ComplexVector& f, int sign);

/// W_b h(z) = h(z - b) e^{z·b - b·b/2}, b real.
Complex weyl_eval(std::span<const double> b, const ComplexFunction& f, std::span<const Complex> z);

struct WeylExpansion {
  ComplexVector value;
  double residual = 0.0;     // F² norm of the dropped terms of degree > N
  unsigned series_degree = 0;  // degree up to which the series was carried
};

/// W_b f on coefficients, W_b = e^{-b·b/2} e^{b·A*} e^{-b·A}, truncated at
/// total degree N. The series is carried past N until its terms are negligible,
/// and the part beyond N is reported as residual. Throws ResidualError if the
/// residual exceeds tolerance.
WeylExpansion weyl_coeff(std::span<const double> b, const ComplexVector& f, unsigned N,
                         double tolerance = 1e-8);

/// max_x |G⁻¹ W_{t/2} G f(x) - e^{x·t/2 - t·t/4} f(x - t)| for a Hermite
/// expansion f. G acts on coefficients, W_{t/2} pointwise, G⁻¹ by quadrature.
double verify_translation_identity(std::span<const double> t, const ComplexVector& f,
                                   const std::vector<std::vector<double>>& xs, const QuadratureRule& lambda);

/// Σ c_β h̃_β(x).
Complex eval_tilde_expansion(const ComplexVector& c, std::span<const double> x);

/// B⁻¹f = Σ c_β h̃_β for f = Σ c_β e_β, with derivatives: on the h̃ family
/// ∂_j = A_j - A_j* (A, A* the annihilation and creation maps).
DerivativeFunction inverse_bargmann_evaluator(const ComplexVector& f);

/// c_β = ∫ f h̃_β dx for |β| <= K, so that Bf = Σ c_β e_β. Lebesgue rule.
ComplexVector bargmann_dx_coefficients(const RealFunction& f, std::size_t n, unsigned K, const QuadratureRule& rule);

}  // namespace fockgauss
