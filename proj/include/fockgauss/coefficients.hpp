#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "fockgauss/exact.hpp"
#include "fockgauss/multiindex.hpp"

namespace fockgauss {

enum class BasisTag { HermiteGamma, FockMonomial };

inline const char* to_string(BasisTag t) {
  return t == BasisTag::HermiteGamma ? "hermite" : "fock";
}

/// Finitely supported expansion sum_beta c_beta b_beta in the Hermite family
/// h_beta (orthonormal in L^2(gamma)) or the Fock family e_beta (orthonormal in
/// F^2). Both families share this coordinate space.
///
/// S is std::complex<double> for numerical work or Surd for exact identities.
/// The stored support never holds an exact zero.
template <class S>
class CoefficientVector {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using Storage = std::map<MultiIndex, S>;

  CoefficientVector(std::size_t dim, BasisTag tag) : dim_(dim), tag_(tag) {
    if (dim == 0) throw std::invalid_argument("fockgauss: coefficient vector needs dimension >= 1");
  }

  static CoefficientVector unit(const MultiIndex& beta, BasisTag tag) {
    CoefficientVector v(beta.dim(), tag);
    v.set(beta, Traits::one());
    return v;
  }

  std::size_t dim() const noexcept { return dim_; }
  BasisTag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return c_.size(); }
  bool empty() const noexcept { return c_.empty(); }

  S at(const MultiIndex& beta) const {
    auto it = c_.find(beta);
    return it == c_.end() ? Traits::zero() : it->second;
  }

  void set(const MultiIndex& beta, S value) {
    check_key(beta);
    if (Traits::is_zero(value)) {
      c_.erase(beta);
    } else {
      c_[beta] = std::move(value);
    }
  }

  void add(const MultiIndex& beta, const S& value) {
    check_key(beta);
    if (Traits::is_zero(value)) return;
    auto [it, inserted] = c_.emplace(beta, value);
    if (!inserted) {
      it->second += value;
      if (Traits::is_zero(it->second)) c_.erase(it);
    }
  }

  /// Highest total degree in the support; 0 for the zero vector.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [beta, v] : c_) d = std::max(d, beta.degree());
    return d;
  }

  CoefficientVector retagged(BasisTag tag) const {
    CoefficientVector r = *this;
    r.tag_ = tag;
    return r;
  }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const Storage& storage() const noexcept { return c_; }

  CoefficientVector& operator+=(const CoefficientVector& o) {
    check_compatible(o);
    for (const auto& [beta, v] : o.c_) add(beta, v);
    return *this;
  }
  CoefficientVector& operator-=(const CoefficientVector& o) {
    check_compatible(o);
    for (const auto& [beta, v] : o.c_) add(beta, -v);
    return *this;
  }
  CoefficientVector& operator*=(const S& a) {
    if (Traits::is_zero(a)) {
      c_.clear();
      return *this;
    }
    for (auto& [beta, v] : c_) v *= a;
    return *this;
  }

  friend CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) { return a += b; }
  friend CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b) { return a -= b; }
  friend CoefficientVector operator*(const S& s, CoefficientVector a) { return a *= s; }
  friend bool operator==(const CoefficientVector& a, const CoefficientVector& b) {
    return a.dim_ == b.dim_ && a.tag_ == b.tag_ && a.c_ == b.c_;
  }

  void check_compatible(const CoefficientVector& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("fockgauss: coefficient vectors differ in dimension");
    if (o.tag_ != tag_) {
      throw std::invalid_argument(std::string("fockgauss: basis mismatch (") + to_string(tag_) + " vs " +
                                  to_string(o.tag_) + ")");
    }
  }

 private:
  void check_key(const MultiIndex& beta) const {
    if (beta.dim() != dim_) {
      throw std::invalid_argument("fockgauss: key " + beta.str() + " has wrong dimension");
    }
  }

  std::size_t dim_;
  BasisTag tag_;
  Storage c_;
};

using ComplexVector = CoefficientVector<std::complex<double>>;
using ExactVector = CoefficientVector<Surd>;

/// <f, g> = sum_beta f_beta conj(g_beta). Throws on basis or dimension mismatch.
template <class S>
S coeff_inner(const CoefficientVector<S>& f, const CoefficientVector<S>& g) {
  f.check_compatible(g);
  S acc = ScalarTraits<S>::zero();
  for (const auto& [beta, fv] : f) {
    auto gi = g.storage().find(beta);
    if (gi != g.storage().end()) acc += fv * ScalarTraits<S>::conj(gi->second);
  }
  return acc;
}

/// sum |c_beta|^2
template <class S>
typename ScalarTraits<S>::Real squared_norm(const CoefficientVector<S>& f) {
  typename ScalarTraits<S>::Real acc{};
  for (const auto& [beta, v] : f) acc += ScalarTraits<S>::abs2(v);
  return acc;
}

inline ComplexVector to_complex(const ExactVector& f) {
  ComplexVector r(f.dim(), f.tag());
  for (const auto& [beta, v] : f) r.set(beta, {v.to_double(), 0.0});
  return r;
}

}  // namespace fockgauss
