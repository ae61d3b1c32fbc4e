#pragma once

#include <Eigen/Dense>

#include <limits>
#include <vector>

#include "fockgauss/coefficients.hpp"
#include "fockgauss/multiindex.hpp"
#include "fockgauss/quadrature.hpp"
#include "fockgauss/symbol.hpp"

namespace fockgauss {

/// Finite section of an operator in the graded basis enumerate_up_to(n, degree).
struct GalerkinMatrix {
  std::size_t n = 1;
  BasisTag tag = BasisTag::HermiteGamma;
  unsigned degree = 0;
  std::vector<MultiIndex> index;
  Eigen::MatrixXcd entries;
  double residual = 0.0;  // quadrature doubling residual, max over entries

  std::size_t side() const noexcept { return index.size(); }
  /// Leading block on degrees <= k (a prefix in graded order).
  GalerkinMatrix block(unsigned k) const;
  /// T applied to f; f must be supported on degrees <= degree.
  ComplexVector apply(const ComplexVector& f) const;
};

/// T_{αβ} = ∫ u h_β h_α dγ with a count^n gamma rule, repeated at 2*count to
/// estimate the residual. Throws ResidualError above tolerance.
GalerkinMatrix galerkin_multiplier(const RealFunction& u, std::size_t n, unsigned N, std::size_t count,
                                   double tolerance = std::numeric_limits<double>::infinity());
GalerkinMatrix galerkin_multiplier(const SmoothSymbol& u, unsigned N, std::size_t count,
                                   double tolerance = std::numeric_limits<double>::infinity());

/// Σ_{|α|<=m} falling_product(β, α): the Hilbertian W^{2,m} Gram matrix is
/// diagonal in the Hermite basis with these entries.
double sobolev_gram_weight(const MultiIndex& beta, unsigned m);

/// ‖S_out^{1/2} T S_in^{-1/2}‖₂ (largest singular value), Hilbertian Gram matrices.
double sobolev_operator_norm(const GalerkinMatrix& T, unsigned m_in, unsigned m_out);

/// Σ_{|α|<=m} max over grid |∂^α u|.
double lemma33_bound(const SmoothSymbol& u, unsigned m, const std::vector<std::vector<double>>& grid);

/// u_r(x) = ∫ r^{-n} K(t/r) u(x - t) dt with the bump K normalized to mass one.
/// ∂^α u_r = r^{-|α|} ∫ (∂^α K)(s) u(x - r s) ds, so u needs no derivatives.
/// Integrals use a uniform grid of `points` intervals per axis on [-1, 1]^n.
SmoothSymbol mollify(const SmoothSymbol& u, double r, unsigned order, std::size_t points = 64);

struct Theorem36Quantities {
  double lhs = 0.0;  // ‖T_u‖ on W^{2,m}
  double rhs = 0.0;  // Σ_{|α|=m} ‖T_{∂^α u}‖_{W^{2,m} -> L²} + ‖T_u‖_{L²}
  double lhs_prev = 0.0;  // same at N - 2
  double rhs_prev = 0.0;
  unsigned degree = 0;
  double residual = 0.0;
};

Theorem36Quantities theorem36_quantities(const SmoothSymbol& u, unsigned m, unsigned N, std::size_t count);

struct LogConvexityProbe {
  double lhs[3] = {0.0, 0.0, 0.0};  // ‖T_u‖ on W^{2,m}, m = 0, 1, 2
  double midpoint_ratio = 0.0;      // lhs1 / sqrt(lhs0 lhs2)
  bool within_slack = false;        // midpoint_ratio <= 1.10
};

/// Heuristic: finite sections only approximate multiplier norms.
LogConvexityProbe log_convexity_probe(const SmoothSymbol& u, unsigned N, std::size_t count);

}  // namespace fockgauss
