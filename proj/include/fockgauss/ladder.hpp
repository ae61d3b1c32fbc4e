#pragma once

// Creation/annihilation calculus on coefficient vectors. The same formulas
// represent d/dx_j and (x_j - d/dx_j) on the Hermite side and d/dz_j and z_j on
// the Fock side, which is what makes the two Sobolev scales isometric.

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "fockgauss/coefficients.hpp"
#include "fockgauss/multiindex.hpp"

namespace fockgauss {

namespace detail {

template <class S>
void require_axis(const CoefficientVector<S>& f, std::size_t j) {
  if (j >= f.dim()) throw std::out_of_range("fockgauss: axis " + std::to_string(j) + " out of range");
}

template <class S>
void require_hermite(const CoefficientVector<S>& f, const char* what) {
  if (f.tag() != BasisTag::HermiteGamma) {
    throw std::invalid_argument(std::string("fockgauss: ") + what + " needs a Hermite-tagged vector");
  }
}

}  // namespace detail

/// Lowering in axis j: result_beta = sqrt(beta_j + 1) f_{beta + e_j}. Axes are 0-based.
template <class S>
CoefficientVector<S> annihilate(std::size_t j, const CoefficientVector<S>& f) {
  detail::require_axis(f, j);
  CoefficientVector<S> out(f.dim(), f.tag());
  for (const auto& [beta, c] : f) {
    if (beta[j] == 0) continue;
    out.add(beta.lowered(j), ScalarTraits<S>::sqrt_int(beta[j]) * c);
  }
  return out;
}

/// Raising in axis j: result_beta = sqrt(beta_j) f_{beta - e_j}.
template <class S>
CoefficientVector<S> create(std::size_t j, const CoefficientVector<S>& f) {
  detail::require_axis(f, j);
  CoefficientVector<S> out(f.dim(), f.tag());
  for (const auto& [beta, c] : f) out.add(beta.raised(j), ScalarTraits<S>::sqrt_int(beta[j] + 1) * c);
  return out;
}

/// Multiplication by x_j on the Hermite side.
template <class S>
CoefficientVector<S> position(std::size_t j, const CoefficientVector<S>& f) {
  detail::require_hermite(f, "position");
  return create(j, f) + annihilate(j, f);
}

/// d^alpha: coefficient moves from beta + alpha to beta with factor
/// falling_product(beta + alpha, alpha)^{1/2}.
template <class S>
CoefficientVector<S> partial_alpha(const MultiIndex& alpha, const CoefficientVector<S>& f) {
  if (alpha.dim() != f.dim()) throw std::invalid_argument("partial_alpha: dimension mismatch");
  CoefficientVector<S> out(f.dim(), f.tag());
  for (const auto& [beta, c] : f) {
    if (!leq(alpha, beta)) continue;
    out.add(beta - alpha, ScalarTraits<S>::sqrt_int(falling_product(beta, alpha)) * c);
  }
  return out;
}

/// Ornstein-Uhlenbeck operator, applied spectrally: L h_beta = -|beta| h_beta.
template <class S>
CoefficientVector<S> ou_apply(const CoefficientVector<S>& f) {
  detail::require_hermite(f, "ou_apply");
  CoefficientVector<S> out(f.dim(), f.tag());
  for (const auto& [beta, c] : f) {
    out.add(beta, ScalarTraits<S>::from_int(-static_cast<std::int64_t>(beta.degree())) * c);
  }
  return out;
}

/// J_k: keeps the coefficients with |beta| == k.
template <class S>
CoefficientVector<S> level_project(unsigned k, const CoefficientVector<S>& f) {
  CoefficientVector<S> out(f.dim(), f.tag());
  for (const auto& [beta, c] : f) {
    if (beta.degree() == k) out.set(beta, c);
  }
  return out;
}

/// Operator acting on level k by a scalar factor(k); J_k, (I - L)^{-s/2} and the
/// OU eigenvalues are all of this form.
template <class S>
struct DiagonalLevelOperator {
  std::function<S(unsigned)> factor;

  CoefficientVector<S> apply(const CoefficientVector<S>& f) const {
    CoefficientVector<S> out(f.dim(), f.tag());
    for (const auto& [beta, c] : f) out.add(beta, factor(beta.degree()) * c);
    return out;
  }
};

/// (1 + k)^{-s/2}; negative s gives the inverse potential.
inline DiagonalLevelOperator<std::complex<double>> bessel_operator(double s) {
  return {[s](unsigned k) { return std::complex<double>(std::pow(1.0 + k, -s / 2.0), 0.0); }};
}

/// Exact (1 + k)^{-s/2} for integer s of either sign.
inline DiagonalLevelOperator<Surd> bessel_operator_exact(int s) {
  return {[s](unsigned k) {
    const unsigned long base = 1ul + k;
    const int a = s < 0 ? -s : s;
    Rational p(1);
    for (int i = 0; i < a / 2; ++i) p *= Rational(base);
    Surd v(p);
    if (a % 2) v *= Surd::sqrt_of(base);
    if (s <= 0) return v;
    // 1 / (p sqrt(b)) = sqrt(b) / (p b)
    if (a % 2) return Surd::sqrt_of(base) / (p * Rational(base));
    return Surd(Rational(1) / p);
  }};
}

/// (I - L)^{-s/2} f, s >= 0.
inline ComplexVector bessel_potential(double s, const ComplexVector& f) {
  if (s < 0) throw std::domain_error("bessel_potential: order must be >= 0");
  detail::require_hermite(f, "bessel_potential");
  return bessel_operator(s).apply(f);
}

/// (I - L)^{+s/2} f on a finite expansion; inverse of bessel_potential.
inline ComplexVector inverse_bessel(double s, const ComplexVector& f) {
  if (s < 0) throw std::domain_error("inverse_bessel: order must be >= 0");
  detail::require_hermite(f, "inverse_bessel");
  return bessel_operator(-s).apply(f);
}

inline ExactVector bessel_potential(int s, const ExactVector& f) {
  if (s < 0) throw std::domain_error("bessel_potential: order must be >= 0");
  detail::require_hermite(f, "bessel_potential");
  return bessel_operator_exact(s).apply(f);
}

inline ExactVector inverse_bessel(int s, const ExactVector& f) {
  if (s < 0) throw std::domain_error("inverse_bessel: order must be >= 0");
  detail::require_hermite(f, "inverse_bessel");
  return bessel_operator_exact(-s).apply(f);
}

/// Writes g = sum_{|alpha| <= m} d^alpha g_alpha. Each step from order k to k+1
/// rewrites g_beta through I - L = sum_j d_j (x_j - d_j) - (n - 1) I applied to
/// (I - L)^{-1} g_beta.
template <class S>
std::map<MultiIndex, CoefficientVector<S>> lemma44_decompose(const CoefficientVector<S>& g, unsigned m) {
  detail::require_hermite(g, "lemma44_decompose");
  const std::size_t n = g.dim();
  std::map<MultiIndex, CoefficientVector<S>> parts;
  parts.emplace(MultiIndex(n), g);
  // (I - L)^{-1}: the s = 2 Bessel potential, factor 1 / (1 + k).
  const DiagonalLevelOperator<S> resolvent{
      [](unsigned k) { return ScalarTraits<S>::inverse_int(1u + k); }};
  const S shift = ScalarTraits<S>::from_int(-static_cast<std::int64_t>(n) + 1);
  for (unsigned step = 0; step < m; ++step) {
    std::map<MultiIndex, CoefficientVector<S>> next;
    auto accumulate = [&](const MultiIndex& key, const CoefficientVector<S>& v) {
      auto [it, inserted] = next.emplace(key, v);
      if (!inserted) it->second += v;
    };
    for (const auto& [beta, gb] : parts) {
      const CoefficientVector<S> r = resolvent.apply(gb);
      for (std::size_t j = 0; j < n; ++j) accumulate(beta.raised(j), create(j, r));
      if (n > 1) accumulate(beta, shift * r);
    }
    parts = std::move(next);
  }
  return parts;
}

/// sum_alpha d^alpha g_alpha; inverse of lemma44_decompose.
template <class S>
CoefficientVector<S> lemma44_reconstruct(const std::map<MultiIndex, CoefficientVector<S>>& parts,
                                         std::size_t dim) {
  CoefficientVector<S> out(dim, BasisTag::HermiteGamma);
  for (const auto& [alpha, ga] : parts) out += partial_alpha(alpha, ga);
  return out;
}

}  // namespace fockgauss
