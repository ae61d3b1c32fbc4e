#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "fockgauss/basis.hpp"
#include "fockgauss/coefficients.hpp"
#include "fockgauss/multiindex.hpp"
#include "fockgauss/quadrature.hpp"

namespace fockgauss {

/// How the seminorms ‖∂^α f‖, |α| <= m, are combined into a Sobolev norm.
enum class SobolevConvention {
  SumOfNorms,  // Σ ‖∂^α f‖, the definition used for the function spaces
  Hilbertian,  // (Σ ‖∂^α f‖²)^{1/2}, inner-product induced; used for operator norms
};

const char* to_string(SobolevConvention c) noexcept;

/// ‖∂^α f‖² = Σ_β |c_β|² falling_product(β, α). Same formula on both sides;
/// exact for ExactVector.
template <class S>
typename ScalarTraits<S>::Real squared_seminorm(const CoefficientVector<S>& f, const MultiIndex& alpha) {
  using Real = typename ScalarTraits<S>::Real;
  if (alpha.dim() != f.dim()) throw std::invalid_argument("squared_seminorm: dimension mismatch");
  Real acc{};
  for (const auto& [beta, c] : f) {
    const std::uint64_t fp = falling_product(beta, alpha);
    if (fp == 0) continue;
    acc += ScalarTraits<S>::abs2(c) * Real(static_cast<long>(fp));
  }
  return acc;
}

/// Every squared seminorm with |α| <= m, keyed by α.
template <class S>
std::map<MultiIndex, typename ScalarTraits<S>::Real> squared_seminorms(const CoefficientVector<S>& f, unsigned m) {
  std::map<MultiIndex, typename ScalarTraits<S>::Real> out;
  for (const auto& alpha : enumerate_up_to(f.dim(), m)) out.emplace(alpha, squared_seminorm(f, alpha));
  return out;
}

/// ‖∂^α f‖²_{F²} computed from the monomial form f = Σ a_γ z^γ, a_γ = c_γ/sqrt(γ!):
/// differentiate monomials, then use ‖z^γ‖² = γ!. Independent of the ladder
/// shortcut, so it serves as the Fock-side route of the isometry check.
template <class S>
typename ScalarTraits<S>::Real fock_squared_seminorm_monomial(const CoefficientVector<S>& f, const MultiIndex& alpha) {
  using T = ScalarTraits<S>;
  using Real = typename T::Real;
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("fock_squared_seminorm_monomial: needs Fock tag");
  if (alpha.dim() != f.dim()) throw std::invalid_argument("fock_squared_seminorm_monomial: dimension mismatch");
  std::map<MultiIndex, S> derived;
  for (const auto& [beta, c] : f) {
    if (!leq(alpha, beta)) continue;
    const std::uint64_t bf = multi_factorial(beta);
    // c / sqrt(β!) = c sqrt(β!) / β!
    S a = c * T::sqrt_int(bf) * T::inverse_int(bf);
    a = a * T::from_int(static_cast<std::int64_t>(falling_product(beta, alpha)));
    derived.emplace(beta - alpha, a);
  }
  Real acc{};
  for (const auto& [gamma, a] : derived) acc += T::abs2(a) * Real(static_cast<long>(multi_factorial(gamma)));
  return acc;
}

/// ‖ |z|^m f ‖²_{F²} = Σ_{|k|=m} (m!/k!) Σ_β |c_β|² (β+k)!/β!.
template <class S>
typename ScalarTraits<S>::Real weighted_fock_squared_norm(const CoefficientVector<S>& f, unsigned m) {
  using Real = typename ScalarTraits<S>::Real;
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("weighted_fock_norm: needs Fock tag");
  Real acc{};
  for (const auto& k : enumerate_degree(f.dim(), m)) {
    const std::uint64_t mult = multinomial(k);
    for (const auto& [beta, c] : f) {
      const std::uint64_t moment = falling_product(beta + k, k);
      std::uint64_t w = 0;
      if (__builtin_mul_overflow(mult, moment, &w)) throw std::overflow_error("weighted_fock_norm: moment overflow");
      acc += ScalarTraits<S>::abs2(c) * Real(static_cast<long>(w));
    }
  }
  return acc;
}

double gauss_sobolev_norm(const ComplexVector& f, unsigned m,
                          SobolevConvention convention = SobolevConvention::SumOfNorms);
double fock_sobolev_norm(const ComplexVector& f, unsigned m,
                         SobolevConvention convention = SobolevConvention::SumOfNorms);

/// ‖ |z|^m f ‖_{F²}.
double weighted_fock_norm(const ComplexVector& f, unsigned m);

/// (Σ_k (1+k)^s ‖J_k f‖²)^{1/2}.
double bessel_norm(const ComplexVector& f, double s);

/// Exact extremes of a norm ratio over all nonzero f of degree <= N.
/// Both ratios below depend on f only through q_β = |c_β|². Each is, up to a
/// reciprocal, h(q) / sqrt(d·q) with h the Sobolev norm. Under the Hilbertian
/// convention that is linear-fractional, so both extremes sit on basis vectors.
/// Under the sum-of-norms convention h is concave: one extreme is at a basis
/// vector and the other is a concave maximization, solved by Frank-Wolfe
/// with a duality-gap certificate.
struct RatioExtremes {
  double min = 0.0;
  double max = 0.0;
  double gap = 0.0;  // the optimized extreme is within gap of the true one
  std::size_t iterations = 0;
};

/// ‖f‖_{W^{2,s}(γ)} / ‖f‖_{L^{2,s}(γ)}; the optimized extreme is the max.
RatioExtremes sobolev_bessel_ratio_extremes(std::size_t n, unsigned N, unsigned s, SobolevConvention convention);

/// ‖ |z|^m f ‖_{F²} / ‖f‖_{F^{2,m}}; the optimized extreme is the min.
RatioExtremes weighted_sobolev_ratio_extremes(std::size_t n, unsigned N, unsigned m,
                                              SobolevConvention convention = SobolevConvention::SumOfNorms);

/// ∂^α f(x) for every |α| <= m the caller asks for.
using DerivativeFunction = std::function<Complex(const MultiIndex&, std::span<const double>)>;

/// Sampling of a Lebesgue-measure rule: count nodes per axis placed like
/// e^{-a|x - center|^2}. The count is doubled once to estimate the residual.
struct LebesgueSampling {
  std::size_t count = 48;
  double a = 1.0;
  double center = 0.0;
};

struct QuadratureEstimate {
  double value = 0.0;
  double residual = 0.0;  // |value(2 count) - value(count)|
};

/// Σ_{|α|<=m} (∫ |∂^α f|² dx)^{1/2} (or the Hilbertian combination), reported
/// at 2*count. Throws ResidualError when the doubling residual exceeds tolerance.
QuadratureEstimate classical_sobolev_norm_dx(const DerivativeFunction& f, unsigned m, std::size_t n,
                                             const LebesgueSampling& sampling, double tolerance,
                                             SobolevConvention convention = SobolevConvention::SumOfNorms);

}  // namespace fockgauss
