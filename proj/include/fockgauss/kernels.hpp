#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2+FMA version; the public entry points dispatch at runtime
// on the detected instruction set. tests/unit/test_kernels.cpp holds the two
// variants to each other.

#include <complex>
#include <cstddef>
#include <span>

namespace fockgauss::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;

/// Best instruction set supported by this CPU and this build.
Isa detected_isa() noexcept;

/// Instruction set used by the dispatching entry points. Defaults to
/// detected_isa(); FOCKGAUSS_ISA=scalar in the environment forces the
/// reference path.
Isa active_isa() noexcept;

/// Overrides the dispatch choice (tests). Requesting an unsupported ISA falls
/// back to Scalar.
void set_active_isa(Isa isa) noexcept;

// out is row-major (max_degree + 1) x x.size(): out[k * x.size() + i] = h_k(x_i),
// by the normalized three-term recurrence.
void hermite_table(std::span<const double> x, unsigned max_degree, std::span<double> out);

// Same recurrence with the Gaussian folded in: out[k][i] = s * e^{-x_i^2} h_k(2 x_i)
// where s = (2/pi)^{1/4}. These are the L^2(dx)-orthonormal functions h~_k.
void hermite_tilde_table(std::span<const double> x, unsigned max_degree, std::span<double> out);

// sum_i w_i v_i
std::complex<double> weighted_sum(std::span<const double> w, std::span<const std::complex<double>> v);

// out[a * rows + b] = sum_q w_q table[a * cols + q] * table[b * cols + q], with
// table of shape rows x cols. out is rows x rows and symmetric.
void weighted_gram(std::span<const double> table, std::size_t rows, std::size_t cols,
                   std::span<const double> w, std::span<double> out);

namespace scalar {
void hermite_table(std::span<const double> x, unsigned max_degree, std::span<double> out);
void hermite_tilde_table(std::span<const double> x, unsigned max_degree, std::span<double> out);
std::complex<double> weighted_sum(std::span<const double> w, std::span<const std::complex<double>> v);
void weighted_gram(std::span<const double> table, std::size_t rows, std::size_t cols,
                   std::span<const double> w, std::span<double> out);
}  // namespace scalar

#if defined(FOCKGAUSS_HAVE_AVX2)
namespace avx2 {
void hermite_table(std::span<const double> x, unsigned max_degree, std::span<double> out);
void hermite_tilde_table(std::span<const double> x, unsigned max_degree, std::span<double> out);
std::complex<double> weighted_sum(std::span<const double> w, std::span<const std::complex<double>> v);
void weighted_gram(std::span<const double> table, std::size_t rows, std::size_t cols,
                   std::span<const double> w, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace fockgauss::kernels
