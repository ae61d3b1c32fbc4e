#pragma once

// S_φ f(z) = ∫ f(w) e^{z·w̄} φ(z - w̄) dλ(w), by direct quadrature of the kernel
// and by the factorization C_i G M_u G⁻¹ C_{-i} through a Galerkin matrix.

#include <vector>

#include "fockgauss/coefficients.hpp"
#include "fockgauss/multipliers.hpp"
#include "fockgauss/quadrature.hpp"
#include "fockgauss/symbol.hpp"

namespace fockgauss {

/// (2/π)^{n/2}, the value calibrate_normalization is expected to find.
double expected_kappa(std::size_t n);

/// φ(ζ) = κ ∫ u(2x) e^{-2(x - iζ/2)·(x - iζ/2)} dx. For each ζ the Gaussian rule
/// is centered at Re(iζ/2), which leaves only a bounded oscillation in the
/// integrand.
class PhiFromSymbol {
 public:
  PhiFromSymbol(RealFunction u, std::size_t n, std::size_t count, double kappa);
  Complex operator()(std::span<const Complex> zeta) const;

 private:
  RealFunction u_;
  std::size_t n_;
  double kappa_;
  Rule1D base_;
};

Complex phi_from_symbol(const SmoothSymbol& u, std::span<const Complex> zeta, std::size_t count, double kappa);

/// Quadrature sizes used by the direct route.
struct SphiQuadrature {
  std::size_t phi_count = 96;      // nodes per axis for the φ integral
  std::size_t lambda_count = 48;   // nodes per real axis of the λ rule
  double lambda_a_re = 0.5;        // sampling exponents of the λ rule
  double lambda_a_im = 1.0;
};

/// S_φ f(z) by quadrature over the λ rule.
Complex sphi_direct(const ComplexFunction& phi, const ComplexFunction& f, std::span<const Complex> z,
                    const QuadratureRule& lambda);

struct Calibration {
  double kappa = 0.0;          // mean of e_β(z) / S_{φ_raw} e_β(z) over the probes
  double spread = 0.0;         // max deviation of the individual quotients from kappa
  Complex raw_phi_at_zero{};   // unnormalized φ(0) for u ≡ 1
};

/// Finds κ such that u ≡ 1 yields the identity: probes e_β, |β| <= 3, at a few
/// points z. Throws ResidualError if the quotients disagree beyond tolerance.
Calibration calibrate_normalization(std::size_t n, const SphiQuadrature& q, double tolerance = 1e-6);

/// ⟨S_φ e_β, e_α⟩ for |α|, |β| <= N, n = 1: S_φ e_β is sampled on the circle
/// |z| = radius and its Taylor coefficients are read off by a discrete Fourier sum.
GalerkinMatrix sphi_direct_matrix(const ComplexFunction& phi, unsigned N, const SphiQuadrature& q,
                                  double radius = 1.0, std::size_t circle_points = 32);

/// Matrix of C_i G M_u G⁻¹ C_{-i}: i^{|α|} T_{αβ} (-i)^{|β|}.
GalerkinMatrix sphi_factored_matrix(const GalerkinMatrix& T);

/// C_i G M_u G⁻¹ C_{-i} f through the degree-N Galerkin matrix of u.
ComplexVector sphi_factored(const SmoothSymbol& u, const ComplexVector& f, unsigned N, std::size_t count);

struct BlockResidual {
  double inner = 0.0;  // Frobenius norm on the degree <= inner_degree block
  double full = 0.0;   // Frobenius norm on the whole truncation
  unsigned degree = 0;
  unsigned inner_degree = 0;
};

/// [T_u, T_v] for degree-N Galerkin matrices. Multiplication operators commute;
/// their finite sections do so only away from the truncation edge.
BlockResidual commutation_check(const SmoothSymbol& u, const SmoothSymbol& v, unsigned N, std::size_t count,
                                unsigned inner_degree = 2);

/// T_u T_{1/u} - I. Throws PreconditionError if |u| comes within 1e-6 of zero on the probe grid.
BlockResidual invertibility_check(const SmoothSymbol& u, unsigned N, std::size_t count,
                                  const std::vector<std::vector<double>>& probe_grid, unsigned inner_degree = 2);

}  // namespace fockgauss
