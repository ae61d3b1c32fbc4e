#include <doctest.h>

#include <stdexcept>

#include "fockgauss/multiindex.hpp"

using namespace fockgauss;

namespace {
std::size_t binomial(std::size_t a, std::size_t b) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}
}  // namespace

TEST_CASE("enumeration sizes and graded order") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned N = 0; N <= 6; ++N) {
      const auto all = enumerate_up_to(n, N);
      CHECK(all.size() == binomial(n + N, n));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
      std::size_t total = 0;
      for (unsigned d = 0; d <= N; ++d) {
        for (const auto& a : enumerate_degree(n, d)) CHECK(a.degree() == d);
        total += enumerate_degree(n, d).size();
      }
      CHECK(total == all.size());
    }
  }
  const auto two = enumerate_up_to(2, 2);
  REQUIRE(two.size() == 6);
  CHECK(two[1] == MultiIndex{1, 0});
  CHECK(two[2] == MultiIndex{0, 1});
  CHECK(two[3] == MultiIndex{2, 0});
}

TEST_CASE("factorials, falling products, multinomials") {
  CHECK(multi_factorial(MultiIndex{3, 2}) == 12);
  CHECK(falling_product(MultiIndex{5, 3}, MultiIndex{2, 1}) == 20 * 3);
  CHECK(falling_product(MultiIndex{1, 3}, MultiIndex{2, 0}) == 0);
  CHECK(multinomial(MultiIndex{2, 1}) == 3);
  CHECK(multi_binomial(MultiIndex{4, 2}, MultiIndex{2, 1}) == 12);
  // falling_product(b, a) = b! / (b - a)!
  for (const auto& b : enumerate_up_to(2, 6)) {
    for (const auto& a : enumerate_up_to(2, 6)) {
      if (leq(a, b)) CHECK(falling_product(b, a) * multi_factorial(b - a) == multi_factorial(b));
    }
  }
  CHECK_THROWS_AS(multi_factorial(MultiIndex{25}), std::overflow_error);
  CHECK_THROWS_AS((leq(MultiIndex{1}, MultiIndex{1, 2})), std::invalid_argument);
  CHECK_THROWS_AS((MultiIndex{0, 1}.lowered(0)), std::domain_error);
}

TEST_CASE("raising, lowering and arithmetic") {
  const MultiIndex a{2, 1};
  CHECK(a.raised(1) == MultiIndex{2, 2});
  CHECK(a.lowered(0) == MultiIndex{1, 1});
  CHECK(a + MultiIndex{1, 1} - MultiIndex{1, 1} == a);
  CHECK(MultiIndex::unit(3, 2) == MultiIndex{0, 0, 1});
  CHECK(a.str() == "(2,1)");
}

TEST_CASE("index set positions follow the enumeration") {
  const IndexSet s(2, 4);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.position(s[i]) == i);
  CHECK_FALSE(s.contains(MultiIndex{5, 0}));
  CHECK_THROWS_AS((s.position(MultiIndex{5, 0})), std::out_of_range);
}
