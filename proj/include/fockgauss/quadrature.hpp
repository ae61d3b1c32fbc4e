#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fockgauss {

using Complex = std::complex<double>;
using RealFunction = std::function<Complex(std::span<const double>)>;
using ComplexFunction = std::function<Complex(std::span<const Complex>)>;

/// Which measure the weights of a rule discretize.
enum class WeightConvention {
  Gamma,           // probability measure dγ on R^n
  Lambda,          // dλ on C^n, real axes (Re z_1..Re z_n, Im z_1..Im z_n)
  ScaledGaussian,  // e^{-a|x|^2} dx on R^n
  Lebesgue,        // dx on R^n (Gaussian rule with the weight divided out)
};

const char* to_string(WeightConvention c) noexcept;

/// Node limit for tensor products unless a caller passes its own.
inline constexpr std::size_t kDefaultTensorCap = 65536;  // 16^4

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const noexcept { return nodes.size(); }
};

/// count-point Gauss rule for dγ in one variable, exact to degree 2*count-1.
/// Golub-Welsch on the Jacobi matrix with off-diagonals sqrt(k), then Newton
/// polishing and symmetrization.
Rule1D gauss_hermite_gamma(std::size_t count);

class QuadratureRule {
 public:
  QuadratureRule(std::size_t axes, WeightConvention convention, std::vector<double> nodes,
                 std::vector<double> weights);

  std::size_t axes() const noexcept { return axes_; }
  /// Dimension of the integration domain: axes for real rules, axes/2 for lambda rules.
  std::size_t dim() const noexcept;
  std::size_t size() const noexcept { return weights_.size(); }
  WeightConvention convention() const noexcept { return convention_; }

  std::span<const double> node(std::size_t i) const { return {nodes_.data() + i * axes_, axes_}; }
  /// Complex point of node i of a lambda rule.
  std::vector<Complex> complex_node(std::size_t i) const;
  std::span<const double> weights() const noexcept { return weights_; }
  /// Column j of the node array (coordinate j of every node).
  std::vector<double> coordinate(std::size_t j) const;

 private:
  std::size_t axes_;
  WeightConvention convention_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Cartesian product of 1-D rules; tuple weight is the product of axis weights.
QuadratureRule tensorize(const std::vector<Rule1D>& per_axis, WeightConvention convention,
                         std::size_t cap = kDefaultTensorCap);
QuadratureRule tensorize(const Rule1D& rule, std::size_t n, std::size_t cap = kDefaultTensorCap);

/// 1-D rule for ∫ g(t) e^{-a (t - center)^2} dt: nodes center + s/sqrt(2a), weights w sqrt(pi/a).
Rule1D scale_rule(const Rule1D& gamma, double a, double center = 0.0);

QuadratureRule gamma_rule(std::size_t count, std::size_t n, std::size_t cap = kDefaultTensorCap);

/// Rule for dλ on C^n. The real parts are sampled for weight e^{-a_re u^2}, the
/// imaginary parts for e^{-a_im v^2}; the weights are dressed so the rule always
/// integrates against dλ. Matching a_re, a_im to the integrand's growth keeps it
/// polynomial-like on the nodes.
QuadratureRule lambda_rule(std::size_t count, std::size_t n, double a_re = 1.0, double a_im = 1.0,
                           std::size_t cap = kDefaultTensorCap);

/// Rule for e^{-a|x|^2} dx.
QuadratureRule scaled_gaussian_rule(std::size_t count, std::size_t n, double a,
                                    std::size_t cap = kDefaultTensorCap);

/// Rule for plain dx, sampled like e^{-a|x - center|^2}.
QuadratureRule lebesgue_rule(std::size_t count, std::size_t n, double a, double center = 0.0,
                             std::size_t cap = kDefaultTensorCap);

Complex integrate_gamma(const RealFunction& f, const QuadratureRule& rule);
Complex integrate_lambda(const ComplexFunction& f, const QuadratureRule& rule);
Complex integrate_scaled_gaussian(const RealFunction& f, const QuadratureRule& rule);
Complex integrate_lebesgue(const RealFunction& f, const QuadratureRule& rule);

}  // namespace fockgauss
