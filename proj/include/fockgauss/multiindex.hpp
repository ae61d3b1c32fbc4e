#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace fockgauss {

/// An n-tuple of non-negative integers. Indexes both the Hermite family h_beta
/// and the Fock family e_beta.
///
/// Ordering is graded lexicographic: lower total degree first, and within a
/// degree the tuple with the larger leading component first, so that
/// (0,0) < (1,0) < (0,1) < (2,0) < (1,1) < (0,2).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : c_(dim, 0u) {}
  MultiIndex(std::initializer_list<unsigned> c) : c_(c) {}
  explicit MultiIndex(std::vector<unsigned> c) : c_(std::move(c)) {}

  static MultiIndex unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return c_.size(); }
  unsigned operator[](std::size_t j) const { return c_[j]; }
  unsigned& operator[](std::size_t j) { return c_[j]; }
  const std::vector<unsigned>& components() const noexcept { return c_; }

  unsigned degree() const noexcept;

  /// beta + e_j
  MultiIndex raised(std::size_t axis) const;
  /// beta - e_j; throws std::domain_error if component j is zero.
  MultiIndex lowered(std::size_t axis) const;

  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<unsigned> c_;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
/// Componentwise difference; requires b <= a.
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of dimension n with |alpha| <= max_degree, graded lex order.
/// Length is C(n + N, n).
std::vector<MultiIndex> enumerate_up_to(std::size_t n, unsigned max_degree);

/// Multi-indices of dimension n with |alpha| == degree, in canonical order.
std::vector<MultiIndex> enumerate_degree(std::size_t n, unsigned degree);

/// alpha! = alpha_1! ... alpha_n!. Throws std::overflow_error past 64 bits.
std::uint64_t multi_factorial(const MultiIndex& alpha);

/// prod_j beta_j (beta_j - 1) ... (beta_j - alpha_j + 1); zero unless alpha <= beta.
/// Equals beta! / (beta - alpha)! when alpha <= beta. Throws std::overflow_error.
std::uint64_t falling_product(const MultiIndex& beta, const MultiIndex& alpha);

/// Componentwise order. Throws std::invalid_argument on dimension mismatch.
bool leq(const MultiIndex& alpha, const MultiIndex& beta);

/// Multinomial coefficient |k|! / k!, overflow-checked.
std::uint64_t multinomial(const MultiIndex& k);

/// Binomial coefficient prod_j C(beta_j, kappa_j), overflow-checked.
std::uint64_t multi_binomial(const MultiIndex& beta, const MultiIndex& kappa);

/// Position lookup over a fixed enumeration; matrices index against this.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::size_t n, unsigned max_degree);

  std::size_t dim() const noexcept { return dim_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return items_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<MultiIndex>& items() const noexcept { return items_; }

  bool contains(const MultiIndex& a) const { return pos_.count(a) != 0; }
  /// Throws std::out_of_range when a is outside the truncation.
  std::size_t position(const MultiIndex& a) const;

 private:
  std::size_t dim_ = 0;
  unsigned max_degree_ = 0;
  std::vector<MultiIndex> items_;
  std::map<MultiIndex, std::size_t> pos_;
};

}  // namespace fockgauss
