#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fockgauss/coefficients.hpp"
#include "fockgauss/multiindex.hpp"

namespace fockgauss {

using Complex = std::complex<double>;

/// h_0(t), ..., h_K(t) for the gamma-normalized Hermite functions,
/// h_{k+1} = (t h_k - sqrt(k) h_{k-1}) / sqrt(k+1).
std::vector<double> hermite_values_1d(unsigned max_degree, double t);

/// h_beta(x) = prod_j h_{beta_j}(x_j).
double hermite_eval(const MultiIndex& beta, std::span<const double> x);

/// e_beta(z) = z^beta / sqrt(beta!).
Complex fock_eval(const MultiIndex& beta, std::span<const Complex> z);

/// h~_beta(x) = (2/pi)^{n/4} (2^{|beta|} beta!)^{-1/2} e^{-|x|^2} H_beta(sqrt(2) x),
/// with H the physicists' Hermite polynomial. Equal to (2/pi)^{n/4} e^{-|x|^2} h_beta(2x);
/// orthonormal in L^2(R^n, dx) and mapped to e_beta by the Bargmann transform.
double hermite_tilde_eval(const MultiIndex& beta, std::span<const double> x);

/// sum_beta c_beta h_beta(x). Requires the Hermite tag.
Complex eval_expansion(const ComplexVector& f, std::span<const double> x);

/// sum_beta c_beta e_beta(z). Requires the Fock tag.
Complex eval_expansion(const ComplexVector& f, std::span<const Complex> z);

/// Partial derivative d^alpha of the Hermite expansion, evaluated at x.
Complex eval_expansion_derivative(const ComplexVector& f, const MultiIndex& alpha,
                                  std::span<const double> x);

}  // namespace fockgauss
