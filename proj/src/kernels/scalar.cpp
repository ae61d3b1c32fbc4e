#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockgauss/kernels.hpp"

namespace fockgauss::kernels::scalar {

void hermite_table(std::span<const double> x, unsigned max_degree, std::span<double> out) {
  const std::size_t m = x.size();
  if (out.size() < (max_degree + 1) * m) throw std::invalid_argument("hermite_table: output too small");
  for (std::size_t i = 0; i < m; ++i) out[i] = 1.0;
  if (max_degree == 0) return;
  for (std::size_t i = 0; i < m; ++i) out[m + i] = x[i];
  for (unsigned k = 1; k < max_degree; ++k) {
    const double a = std::sqrt(static_cast<double>(k));
    const double inv = 1.0 / std::sqrt(static_cast<double>(k + 1));
    const double* hk = out.data() + k * m;
    const double* hkm1 = out.data() + (k - 1) * m;
    double* hkp1 = out.data() + (k + 1) * m;
    for (std::size_t i = 0; i < m; ++i) hkp1[i] = (x[i] * hk[i] - a * hkm1[i]) * inv;
  }
}

void hermite_tilde_table(std::span<const double> x, unsigned max_degree, std::span<double> out) {
  const std::size_t m = x.size();
  if (out.size() < (max_degree + 1) * m) throw std::invalid_argument("hermite_tilde_table: output too small");
  const double s = std::pow(2.0 / std::numbers::pi, 0.25);
  for (std::size_t i = 0; i < m; ++i) out[i] = s * std::exp(-x[i] * x[i]);
  if (max_degree == 0) return;
  for (std::size_t i = 0; i < m; ++i) out[m + i] = 2.0 * x[i] * out[i];
  for (unsigned k = 1; k < max_degree; ++k) {
    const double a = std::sqrt(static_cast<double>(k));
    const double inv = 1.0 / std::sqrt(static_cast<double>(k + 1));
    const double* hk = out.data() + k * m;
    const double* hkm1 = out.data() + (k - 1) * m;
    double* hkp1 = out.data() + (k + 1) * m;
    for (std::size_t i = 0; i < m; ++i) hkp1[i] = (2.0 * x[i] * hk[i] - a * hkm1[i]) * inv;
  }
}

std::complex<double> weighted_sum(std::span<const double> w, std::span<const std::complex<double>> v) {
  if (w.size() != v.size()) throw std::invalid_argument("weighted_sum: length mismatch");
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    re += w[i] * v[i].real();
    im += w[i] * v[i].imag();
  }
  return {re, im};
}

void weighted_gram(std::span<const double> table, std::size_t rows, std::size_t cols,
                   std::span<const double> w, std::span<double> out) {
  if (table.size() < rows * cols || w.size() != cols || out.size() < rows * rows) {
    throw std::invalid_argument("weighted_gram: shape mismatch");
  }
  for (std::size_t a = 0; a < rows; ++a) {
    const double* ta = table.data() + a * cols;
    for (std::size_t b = 0; b <= a; ++b) {
      const double* tb = table.data() + b * cols;
      double acc = 0.0;
      for (std::size_t q = 0; q < cols; ++q) acc += w[q] * ta[q] * tb[q];
      out[a * rows + b] = acc;
      out[b * rows + a] = acc;
    }
  }
}

}  // namespace fockgauss::kernels::scalar
