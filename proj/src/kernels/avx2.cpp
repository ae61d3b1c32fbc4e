// Compiled with -mavx2 -mfma; only reached when the CPU reports both.

#include <immintrin.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockgauss/kernels.hpp"

namespace fockgauss::kernels::avx2 {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// out rows 0 and 1 already filled; runs h_{k+1} = (scale*x*h_k - sqrt(k) h_{k-1}) / sqrt(k+1).
void run_recurrence(const double* x, std::size_t m, unsigned max_degree, double scale, double* out) {
  const __m256d vscale = _mm256_set1_pd(scale);
  for (unsigned k = 1; k < max_degree; ++k) {
    const double a = std::sqrt(static_cast<double>(k));
    const double inv = 1.0 / std::sqrt(static_cast<double>(k + 1));
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vinv = _mm256_set1_pd(inv);
    const double* hk = out + k * m;
    const double* hkm1 = out + (k - 1) * m;
    double* hkp1 = out + (k + 1) * m;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
      __m256d vx = _mm256_mul_pd(vscale, _mm256_loadu_pd(x + i));
      __m256d t = _mm256_mul_pd(vx, _mm256_loadu_pd(hk + i));
      // Keep the scalar operation order: (x*h_k - a*h_{k-1}) * inv, no fused rounding.
      t = _mm256_sub_pd(t, _mm256_mul_pd(va, _mm256_loadu_pd(hkm1 + i)));
      _mm256_storeu_pd(hkp1 + i, _mm256_mul_pd(t, vinv));
    }
    for (; i < m; ++i) hkp1[i] = (scale * x[i] * hk[i] - a * hkm1[i]) * inv;
  }
}

}  // namespace

void hermite_table(std::span<const double> x, unsigned max_degree, std::span<double> out) {
  const std::size_t m = x.size();
  if (out.size() < (max_degree + 1) * m) throw std::invalid_argument("hermite_table: output too small");
  for (std::size_t i = 0; i < m; ++i) out[i] = 1.0;
  if (max_degree == 0) return;
  for (std::size_t i = 0; i < m; ++i) out[m + i] = x[i];
  run_recurrence(x.data(), m, max_degree, 1.0, out.data());
}

void hermite_tilde_table(std::span<const double> x, unsigned max_degree, std::span<double> out) {
  const std::size_t m = x.size();
  if (out.size() < (max_degree + 1) * m) throw std::invalid_argument("hermite_tilde_table: output too small");
  const double s = std::pow(2.0 / std::numbers::pi, 0.25);
  for (std::size_t i = 0; i < m; ++i) out[i] = s * std::exp(-x[i] * x[i]);
  if (max_degree == 0) return;
  for (std::size_t i = 0; i < m; ++i) out[m + i] = 2.0 * x[i] * out[i];
  run_recurrence(x.data(), m, max_degree, 2.0, out.data());
}

std::complex<double> weighted_sum(std::span<const double> w, std::span<const std::complex<double>> v) {
  if (w.size() != v.size()) throw std::invalid_argument("weighted_sum: length mismatch");
  const std::size_t m = w.size();
  const double* pv = reinterpret_cast<const double*>(v.data());
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    // (re0, im0, re1, im1) * (w0, w0, w1, w1)
    __m256d vw = _mm256_set_m128d(_mm_set1_pd(w[i + 1]), _mm_set1_pd(w[i]));
    acc = _mm256_fmadd_pd(vw, _mm256_loadu_pd(pv + 2 * i), acc);
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d s = _mm_add_pd(lo, hi);
  double re = _mm_cvtsd_f64(s);
  double im = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
  for (; i < m; ++i) {
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
      __m256d acc = _mm256_setzero_pd();
      std::size_t q = 0;
      for (; q + 4 <= cols; q += 4) {
        __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w.data() + q), _mm256_loadu_pd(ta + q));
        acc = _mm256_fmadd_pd(wa, _mm256_loadu_pd(tb + q), acc);
      }
      double r = hsum(acc);
      for (; q < cols; ++q) r += w[q] * ta[q] * tb[q];
      out[a * rows + b] = r;
      out[b * rows + a] = r;
    }
  }
}

}  // namespace fockgauss::kernels::avx2
