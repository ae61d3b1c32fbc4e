#include "fockgauss/multiindex.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockgauss {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("fockgauss: 64-bit integer overflow in multi-index arithmetic");
  }
  return r;
}

void require_same_dim(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fockgauss: multi-index dimension mismatch (" + a.str() + " vs " +
                                b.str() + ")");
  }
}

void compositions(std::size_t n, unsigned degree, std::size_t axis, MultiIndex& cur,
                  std::vector<MultiIndex>& out) {
  if (axis + 1 == n) {
    cur[axis] = degree;
    out.push_back(cur);
    return;
  }
  for (unsigned k = degree + 1; k-- > 0;) {
    cur[axis] = k;
    compositions(n, degree - k, axis + 1, cur, out);
  }
  cur[axis] = 0;
}

}  // namespace

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis) {
  MultiIndex e(dim);
  e.c_.at(axis) = 1;
  return e;
}

unsigned MultiIndex::degree() const noexcept {
  return std::accumulate(c_.begin(), c_.end(), 0u);
}

MultiIndex MultiIndex::raised(std::size_t axis) const {
  MultiIndex r = *this;
  ++r.c_.at(axis);
  return r;
}

MultiIndex MultiIndex::lowered(std::size_t axis) const {
  if (c_.at(axis) == 0) throw std::domain_error("fockgauss: lowering a zero component");
  MultiIndex r = *this;
  --r.c_[axis];
  return r;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (j) os << ',';
    os << c_[j];
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto d = a.dim() <=> b.dim(); d != 0) return d;
  if (auto d = a.degree() <=> b.degree(); d != 0) return d;
  // Larger leading component first within a degree.
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (a[j] != b[j]) return b[j] <=> a[j];
  }
  return std::strong_ordering::equal;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a, b);
  MultiIndex r = a;
  for (std::size_t j = 0; j < a.dim(); ++j) r[j] += b[j];
  return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!leq(b, a)) throw std::domain_error("fockgauss: " + a.str() + " - " + b.str() + " is negative");
  MultiIndex r = a;
  for (std::size_t j = 0; j < a.dim(); ++j) r[j] -= b[j];
  return r;
}

std::vector<MultiIndex> enumerate_degree(std::size_t n, unsigned degree) {
  if (n == 0) throw std::invalid_argument("fockgauss: dimension must be >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  compositions(n, degree, 0, cur, out);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(std::size_t n, unsigned max_degree) {
  if (n == 0) throw std::invalid_argument("fockgauss: dimension must be >= 1");
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto level = enumerate_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t multi_factorial(const MultiIndex& alpha) {
  std::uint64_t r = 1;
  for (unsigned a : alpha.components()) {
    for (unsigned k = 2; k <= a; ++k) r = checked_mul(r, k);
  }
  return r;
}

std::uint64_t falling_product(const MultiIndex& beta, const MultiIndex& alpha) {
  require_same_dim(beta, alpha);
  std::uint64_t r = 1;
  for (std::size_t j = 0; j < beta.dim(); ++j) {
    if (alpha[j] > beta[j]) return 0;
    for (unsigned t = 0; t < alpha[j]; ++t) r = checked_mul(r, beta[j] - t);
  }
  return r;
}

bool leq(const MultiIndex& alpha, const MultiIndex& beta) {
  require_same_dim(alpha, beta);
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    if (alpha[j] > beta[j]) return false;
  }
  return true;
}

std::uint64_t multinomial(const MultiIndex& k) {
  // Built as a product of binomials so intermediate values stay small.
  std::uint64_t r = 1;
  unsigned total = 0;
  for (unsigned kj : k.components()) {
    for (unsigned t = 1; t <= kj; ++t) {
      ++total;
      r = checked_mul(r, total);
      r /= t;
    }
  }
  return r;
}

std::uint64_t multi_binomial(const MultiIndex& beta, const MultiIndex& kappa) {
  require_same_dim(beta, kappa);
  std::uint64_t r = 1;
  for (std::size_t j = 0; j < beta.dim(); ++j) {
    if (kappa[j] > beta[j]) return 0;
    std::uint64_t c = 1;
    for (unsigned t = 1; t <= kappa[j]; ++t) {
      c = checked_mul(c, beta[j] - kappa[j] + t);
      c /= t;
    }
    r = checked_mul(r, c);
  }
  return r;
}

IndexSet::IndexSet(std::size_t n, unsigned max_degree)
    : dim_(n), max_degree_(max_degree), items_(enumerate_up_to(n, max_degree)) {
  for (std::size_t i = 0; i < items_.size(); ++i) pos_.emplace(items_[i], i);
}

std::size_t IndexSet::position(const MultiIndex& a) const {
  auto it = pos_.find(a);
  if (it == pos_.end()) throw std::out_of_range("fockgauss: " + a.str() + " outside truncation");
  return it->second;
}

}  // namespace fockgauss
