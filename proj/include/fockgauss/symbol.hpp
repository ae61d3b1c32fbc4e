#pragma once

// Smooth multipliers u: R^n -> C with exact derivatives from truncated Taylor
// arithmetic, plus the small expression language used to pass them on the
// command line.

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fockgauss/multiindex.hpp"

namespace fockgauss {

using Complex = std::complex<double>;

/// Truncated multivariate Taylor polynomial: coefficient k holds ∂^α f / α! for
/// the k-th index of enumerate_up_to(n, order).
class Jet {
 public:
  Jet(std::size_t n, unsigned order);
  static Jet constant(std::size_t n, unsigned order, Complex c);
  /// The coordinate x_j expanded at x_j = value.
  static Jet variable(std::size_t n, unsigned order, std::size_t j, double value);

  std::size_t dim() const noexcept { return n_; }
  unsigned order() const noexcept { return order_; }
  Complex value() const { return c_[0]; }
  /// ∂^α at the expansion point.
  Complex derivative(const MultiIndex& alpha) const;
  const std::vector<Complex>& coefficients() const noexcept { return c_; }
  std::vector<Complex>& coefficients() noexcept { return c_; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(Complex s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(Complex s, Jet a) { return a *= s; }
  friend Jet operator-(Jet a) { return a *= Complex(-1.0); }

 private:
  friend Jet compose(const Jet& g, const std::vector<Complex>& series);
  std::size_t n_;
  unsigned order_;
  std::vector<Complex> c_;
};

Jet exp(const Jet& g);
Jet sin(const Jet& g);
Jet cos(const Jet& g);
Jet reciprocal(const Jet& g);  // requires g.value() != 0

/// A symbol u with derivatives up to a declared order.
class SmoothSymbol {
 public:
  /// Taylor data of u at x up to `order` (order <= declared order).
  using JetFunction = std::function<Jet(std::span<const double> x, unsigned order)>;

  /// validate: compare each derivative of order < declared against central
  /// differences of the one below it at fixed probe points; throws on
  /// disagreement above 1e-5.
  SmoothSymbol(std::size_t n, unsigned order, JetFunction jet, std::string description, bool validate = true);

  std::size_t dim() const noexcept { return n_; }
  unsigned order() const noexcept { return order_; }
  const std::string& description() const noexcept { return description_; }

  Complex value(std::span<const double> x) const;
  /// Throws std::out_of_range for |α| above the declared order.
  Complex derivative(const MultiIndex& alpha, std::span<const double> x) const;
  Jet jet(std::span<const double> x, unsigned order) const;

  /// ∂^α u as a symbol of order (declared - |α|).
  SmoothSymbol partial(const MultiIndex& alpha) const;
  /// 1/u; the caller certifies u has no zero.
  SmoothSymbol inverse() const;

  /// Largest |central difference - derivative| seen during validation.
  double validation_error() const noexcept { return validation_error_; }

 private:
  std::size_t n_;
  unsigned order_;
  JetFunction jet_;
  std::string description_;
  double validation_error_ = 0.0;
};

/// Version tag of the expression language accepted by parse_symbol.
inline constexpr const char* kSymbolGrammarVersion = "symbol-grammar/1";

/// Parses an expression over x1..xn. Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number | 'i' | 'pi' | 'x' index | func '(' expr ')' | '(' expr ')'
///   func    := 'sin' | 'cos' | 'exp'
/// Examples: "1", "exp(-i*x1)", "sin(2*x1)", "2 + sin(x1)", "exp(-(x1^2 + x2^2))".
/// Throws std::invalid_argument with the offending position on bad input.
SmoothSymbol parse_symbol(const std::string& text, std::size_t n, unsigned order);

/// Bump K(t) = exp(-1/(1 - |t|²)) on |t| < 1, zero outside (unnormalized).
Jet bump_jet(std::span<const double> t, unsigned order);

}  // namespace fockgauss
