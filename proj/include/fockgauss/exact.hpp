#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace fockgauss {

using Rational = mpq_class;

/// Exact real number of the form sum_s q_s * sqrt(s), with q_s rational and s
/// square-free. Closed under +, -, *; this is enough for every ladder
/// coefficient sqrt(k) and every squared seminorm, which come out rational.
class Surd {
 public:
  Surd() = default;
  Surd(long v);  // NOLINT(google-explicit-constructor)
  Surd(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// sqrt(k) as t*sqrt(s) with s square-free.
  static Surd sqrt_of(std::uint64_t k);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// True if the value lies in Q; rational_part() is then the whole value.
  bool is_rational() const;
  Rational rational_part() const;
  double to_double() const;
  std::string str() const;

  const std::map<std::uint64_t, Rational>& terms() const noexcept { return terms_; }

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Rational& q);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Rational& q) { return a /= q; }
  friend Surd operator-(Surd a);
  friend bool operator==(const Surd& a, const Surd& b);

 private:
  void add_term(std::uint64_t s, const Rational& q);
  std::map<std::uint64_t, Rational> terms_;
};

/// Per-scalar operations the coefficient calculus needs.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
  using Scalar = std::complex<double>;
  using Real = double;
  static Scalar zero() { return {}; }
  static Scalar one() { return {1.0, 0.0}; }
  static Scalar sqrt_int(std::uint64_t k) { return {std::sqrt(static_cast<double>(k)), 0.0}; }
  static Scalar from_int(std::int64_t k) { return {static_cast<double>(k), 0.0}; }
  static Scalar inverse_int(std::uint64_t k) { return {1.0 / static_cast<double>(k), 0.0}; }
  static Scalar conj(const Scalar& a) { return std::conj(a); }
  static Real abs2(const Scalar& a) { return std::norm(a); }
  static bool is_zero(const Scalar& a) { return a == Scalar{}; }
  static std::complex<double> to_complex(const Scalar& a) { return a; }
  static double real_to_double(Real r) { return r; }
};

template <>
struct ScalarTraits<Surd> {
  using Scalar = Surd;
  using Real = Surd;
  static Scalar zero() { return {}; }
  static Scalar one() { return Surd(1L); }
  static Scalar sqrt_int(std::uint64_t k) { return Surd::sqrt_of(k); }
  static Scalar from_int(std::int64_t k) { return Surd(static_cast<long>(k)); }
  static Scalar inverse_int(std::uint64_t k) {
    return Surd(Rational(1, static_cast<unsigned long>(k)));
  }
  static Scalar conj(const Scalar& a) { return a; }
  static Real abs2(const Scalar& a) { return a * a; }
  static bool is_zero(const Scalar& a) { return a.is_zero(); }
  static std::complex<double> to_complex(const Scalar& a) { return {a.to_double(), 0.0}; }
  static double real_to_double(const Real& r) { return r.to_double(); }
};

}  // namespace fockgauss
