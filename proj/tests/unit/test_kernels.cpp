#include <doctest.h>

#include <vector>

#include "fockgauss/kernels.hpp"
#include "fockgauss/rng.hpp"

using namespace fockgauss;
namespace k = fockgauss::kernels;

namespace {
std::vector<double> uniform(SplitMix64& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}
double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
}  // namespace

#if defined(FOCKGAUSS_HAVE_AVX2)
TEST_CASE("AVX2 kernels agree with the scalar references") {
  if (k::detected_isa() != k::Isa::Avx2) return;
  SplitMix64 rng(21);
  for (std::size_t n : {1, 3, 4, 7, 16, 33, 130}) {
    const auto x = uniform(rng, n, -6.0, 6.0);
    for (unsigned deg : {0u, 1u, 9u, 40u}) {
      std::vector<double> a((deg + 1) * n), b((deg + 1) * n);
      k::scalar::hermite_table(x, deg, a);
      k::avx2::hermite_table(x, deg, b);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(rel(b[i], a[i]) < 1e-12);
      k::scalar::hermite_tilde_table(x, deg, a);
      k::avx2::hermite_tilde_table(x, deg, b);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(rel(b[i], a[i]) < 1e-12);
    }
    const auto w = uniform(rng, n, 0.0, 1.0);
    std::vector<std::complex<double>> v(n);
    for (auto& c : v) c = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto s = k::scalar::weighted_sum(w, v), t = k::avx2::weighted_sum(w, v);
    CHECK(std::abs(s - t) < 1e-13 * (1 + std::abs(s)));
    const std::size_t rows = 1 + n % 9;
    const auto table = uniform(rng, rows * n, -1.0, 1.0);
    std::vector<double> ga(rows * rows), gb(rows * rows);
    k::scalar::weighted_gram(table, rows, n, w, ga);
    k::avx2::weighted_gram(table, rows, n, w, gb);
    for (std::size_t i = 0; i < ga.size(); ++i) CHECK(rel(gb[i], ga[i]) < 1e-12);
  }
}
#endif

TEST_CASE("dispatch follows the active instruction set") {
  const k::Isa before = k::active_isa();
  k::set_active_isa(k::Isa::Scalar);
  CHECK(k::active_isa() == k::Isa::Scalar);
  const std::vector<double> x = {0.5, -1.0, 2.0};
  std::vector<double> a(3 * 4), b(3 * 4);
  k::hermite_table(x, 3, a);
  k::set_active_isa(k::detected_isa());
  k::hermite_table(x, 3, b);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(rel(a[i], b[i]) < 1e-13);
  // h_2(x) = (x^2 - 1) / sqrt(2)
  CHECK(a[2 * 3 + 0] == doctest::Approx((0.25 - 1) / std::sqrt(2.0)));
  CHECK(std::string(k::isa_name(k::Isa::Scalar)) == "scalar");
  k::set_active_isa(before);
}
