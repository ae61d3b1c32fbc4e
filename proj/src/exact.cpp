#include "fockgauss/exact.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockgauss {

namespace {

// k = t^2 * s with s square-free.
void split_square(std::uint64_t k, std::uint64_t& t, std::uint64_t& s) {
  t = 1;
  s = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) t *= p;
    if (e % 2) s *= p;
  }
  s *= k;
}

}  // namespace

Surd::Surd(long v) {
  if (v != 0) terms_.emplace(1, Rational(v));
}

Surd::Surd(const Rational& q) {
  // Equality of mpq values assumes canonical form; callers may pass p/q unreduced.
  Rational c(q);
  c.canonicalize();
  if (c != 0) terms_.emplace(1, c);
}

Surd Surd::sqrt_of(std::uint64_t k) {
  Surd r;
  if (k == 0) return r;
  std::uint64_t t = 0, s = 0;
  split_square(k, t, s);
  r.terms_.emplace(s, Rational(static_cast<unsigned long>(t)));
  return r;
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

double Surd::to_double() const {
  double v = 0.0;
  for (const auto& [s, q] : terms_) v += q.get_d() * std::sqrt(static_cast<double>(s));
  return v;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q.get_str();
    if (s != 1) os << "*sqrt(" << s << ")";
  }
  return os.str();
}

void Surd::add_term(std::uint64_t s, const Rational& q_in) {
  Rational q(q_in);
  q.canonicalize();
  auto [it, inserted] = terms_.emplace(s, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  } else if (q == 0) {
    terms_.erase(it);
  }
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [s, q] : o.terms_) add_term(s, q);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [s, q] : o.terms_) add_term(s, -q);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd r;
  for (const auto& [s1, q1] : terms_) {
    for (const auto& [s2, q2] : o.terms_) {
      // sqrt(s1) sqrt(s2) = g sqrt((s1/g)(s2/g)), g = gcd; square-free stays square-free.
      const std::uint64_t g = std::gcd(s1, s2);
      const std::uint64_t a = s1 / g, b = s2 / g;
      std::uint64_t s = 0;
      if (__builtin_mul_overflow(a, b, &s)) throw std::overflow_error("fockgauss: surd radicand overflow");
      Rational q = q1 * q2;
      q *= Rational(static_cast<unsigned long>(g));
      r.add_term(s, q);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

Surd& Surd::operator/=(const Rational& q) {
  if (q == 0) throw std::domain_error("fockgauss: surd division by zero");
  for (auto& [s, c] : terms_) c /= q;
  return *this;
}

Surd operator-(Surd a) {
  for (auto& [s, q] : a.terms_) q = -q;
  return a;
}

bool operator==(const Surd& a, const Surd& b) {
  // Square roots of distinct square-free integers are linearly independent over Q,
  // so normalized term maps compare exactly.
  return a.terms_ == b.terms_;
}

}  // namespace fockgauss
