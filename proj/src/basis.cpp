#include "fockgauss/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockgauss/ladder.hpp"

namespace fockgauss {

namespace {

void require_dim(const MultiIndex& beta, std::size_t n) {
  if (beta.dim() != n) {
    throw std::invalid_argument("fockgauss: index " + beta.str() + " does not match point dimension " +
                                std::to_string(n));
  }
}

}  // namespace

std::vector<double> hermite_values_1d(unsigned max_degree, double t) {
  std::vector<double> h(max_degree + 1);
  h[0] = 1.0;
  if (max_degree >= 1) h[1] = t;
  for (unsigned k = 1; k < max_degree; ++k) {
    h[k + 1] = (t * h[k] - std::sqrt(static_cast<double>(k)) * h[k - 1]) /
               std::sqrt(static_cast<double>(k + 1));
  }
  return h;
}

double hermite_eval(const MultiIndex& beta, std::span<const double> x) {
  require_dim(beta, x.size());
  double r = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) r *= hermite_values_1d(beta[j], x[j])[beta[j]];
  return r;
}

Complex fock_eval(const MultiIndex& beta, std::span<const Complex> z) {
  require_dim(beta, z.size());
  Complex r{1.0, 0.0};
  for (std::size_t j = 0; j < z.size(); ++j) {
    // z^k / sqrt(k!) accumulated factor by factor to stay in range.
    for (unsigned k = 1; k <= beta[j]; ++k) r *= z[j] / std::sqrt(static_cast<double>(k));
  }
  return r;
}

double hermite_tilde_eval(const MultiIndex& beta, std::span<const double> x) {
  require_dim(beta, x.size());
  const double n = static_cast<double>(x.size());
  double r = std::pow(2.0 / std::numbers::pi, n / 4.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    r *= std::exp(-x[j] * x[j]) * hermite_values_1d(beta[j], 2.0 * x[j])[beta[j]];
  }
  return r;
}

Complex eval_expansion(const ComplexVector& f, std::span<const double> x) {
  if (f.tag() != BasisTag::HermiteGamma) throw std::invalid_argument("eval_expansion: real point needs Hermite tag");
  if (f.dim() != x.size()) throw std::invalid_argument("eval_expansion: dimension mismatch");
  if (f.empty()) return {};
  const unsigned d = f.degree();
  std::vector<std::vector<double>> tables;
  tables.reserve(x.size());
  for (double xj : x) tables.push_back(hermite_values_1d(d, xj));
  Complex acc{};
  for (const auto& [beta, c] : f) {
    double b = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) b *= tables[j][beta[j]];
    acc += c * b;
  }
  return acc;
}

Complex eval_expansion(const ComplexVector& f, std::span<const Complex> z) {
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("eval_expansion: complex point needs Fock tag");
  if (f.dim() != z.size()) throw std::invalid_argument("eval_expansion: dimension mismatch");
  if (f.empty()) return {};
  const unsigned d = f.degree();
  // e_k(z_j) per axis by e_{k} = e_{k-1} z / sqrt(k).
  std::vector<std::vector<Complex>> tables(z.size(), std::vector<Complex>(d + 1));
  for (std::size_t j = 0; j < z.size(); ++j) {
    tables[j][0] = 1.0;
    for (unsigned k = 1; k <= d; ++k) tables[j][k] = tables[j][k - 1] * z[j] / std::sqrt(static_cast<double>(k));
  }
  Complex acc{};
  for (const auto& [beta, c] : f) {
    Complex b{1.0, 0.0};
    for (std::size_t j = 0; j < z.size(); ++j) b *= tables[j][beta[j]];
    acc += c * b;
  }
  return acc;
}

Complex eval_expansion_derivative(const ComplexVector& f, const MultiIndex& alpha, std::span<const double> x) {
  return eval_expansion(partial_alpha(alpha, f), x);
}

}  // namespace fockgauss
