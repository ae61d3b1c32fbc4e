#include <atomic>
#include <cstdlib>
#include <cstring>

#include "fockgauss/kernels.hpp"

namespace fockgauss::kernels {

namespace {

Isa probe() noexcept {
#if defined(FOCKGAUSS_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa initial() noexcept {
  const char* env = std::getenv("FOCKGAUSS_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return probe();
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{initial()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  current().store(isa, std::memory_order_relaxed);
}

#if defined(FOCKGAUSS_HAVE_AVX2)
#define FOCKGAUSS_DISPATCH(fn, ...) \
  (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define FOCKGAUSS_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void hermite_table(std::span<const double> x, unsigned max_degree, std::span<double> out) {
  FOCKGAUSS_DISPATCH(hermite_table, x, max_degree, out);
}

void hermite_tilde_table(std::span<const double> x, unsigned max_degree, std::span<double> out) {
  FOCKGAUSS_DISPATCH(hermite_tilde_table, x, max_degree, out);
}

std::complex<double> weighted_sum(std::span<const double> w, std::span<const std::complex<double>> v) {
  return FOCKGAUSS_DISPATCH(weighted_sum, w, v);
}

void weighted_gram(std::span<const double> table, std::size_t rows, std::size_t cols,
                   std::span<const double> w, std::span<double> out) {
  FOCKGAUSS_DISPATCH(weighted_gram, table, rows, cols, w, out);
}

#undef FOCKGAUSS_DISPATCH

}  // namespace fockgauss::kernels
