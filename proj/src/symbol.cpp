#include "fockgauss/symbol.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace fockgauss {

namespace {

// Index set and product table of jets in n variables up to a given order.
struct JetLayout {
  std::vector<MultiIndex> index;
  std::map<MultiIndex, std::size_t> position;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> products;  // (a, b, a+b)
  std::vector<double> factorial;  // α! per index
};

const JetLayout& layout(std::size_t n, unsigned order) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, order}];
  if (!slot) {
    auto l = std::make_unique<JetLayout>();
    l->index = enumerate_up_to(n, order);
    for (std::size_t k = 0; k < l->index.size(); ++k) {
      l->position.emplace(l->index[k], k);
      l->factorial.push_back(static_cast<double>(multi_factorial(l->index[k])));
    }
    for (std::size_t a = 0; a < l->index.size(); ++a) {
      for (std::size_t b = 0; b < l->index.size(); ++b) {
        if (l->index[a].degree() + l->index[b].degree() > order) continue;
        l->products.emplace_back(a, b, l->position.at(l->index[a] + l->index[b]));
      }
    }
    slot = std::move(l);
  }
  return *slot;
}

void require_same(const Jet& a, const Jet& b) {
  if (a.dim() != b.dim() || a.order() != b.order()) throw std::invalid_argument("Jet: shape mismatch");
}

}  // namespace

Jet::Jet(std::size_t n, unsigned order) : n_(n), order_(order), c_(layout(n, order).index.size()) {}

Jet Jet::constant(std::size_t n, unsigned order, Complex c) {
  Jet j(n, order);
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(std::size_t n, unsigned order, std::size_t j, double value) {
  Jet v = constant(n, order, value);
  if (order >= 1) v.c_[layout(n, order).position.at(MultiIndex::unit(n, j))] = 1.0;
  return v;
}

Complex Jet::derivative(const MultiIndex& alpha) const {
  const auto& l = layout(n_, order_);
  auto it = l.position.find(alpha);
  if (it == l.position.end()) throw std::out_of_range("Jet: derivative " + alpha.str() + " beyond jet order");
  return c_[it->second] * l.factorial[it->second];
}

Jet& Jet::operator+=(const Jet& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(Complex s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same(a, b);
  Jet r(a.n_, a.order_);
  for (const auto& [i, j, k] : layout(a.n_, a.order_).products) r.c_[k] += a.c_[i] * b.c_[j];
  return r;
}

// f(g) from the Taylor series of f at g(0): series[k] = f^{(k)}(g0) / k!.
Jet compose(const Jet& g, const std::vector<Complex>& series) {
  Jet h = g;
  h.c_[0] = 0.0;
  Jet r = Jet::constant(g.n_, g.order_, series[g.order_]);
  for (unsigned k = g.order_; k-- > 0;) {
    r = r * h;
    r.c_[0] += series[k];
  }
  return r;
}

Jet exp(const Jet& g) {
  std::vector<Complex> s(g.order() + 1);
  Complex e = std::exp(g.value());
  for (unsigned k = 0; k <= g.order(); ++k) {
    s[k] = e;
    e /= static_cast<double>(k + 1);
  }
  return compose(g, s);
}

namespace {

Jet trig(const Jet& g, unsigned phase) {
  const Complex v = g.value();
  const Complex cyc[4] = {std::sin(v), std::cos(v), -std::sin(v), -std::cos(v)};
  std::vector<Complex> s(g.order() + 1);
  double fact = 1.0;
  for (unsigned k = 0; k <= g.order(); ++k) {
    if (k > 0) fact *= k;
    s[k] = cyc[(k + phase) % 4] / fact;
  }
  return compose(g, s);
}

}  // namespace

Jet sin(const Jet& g) { return trig(g, 0); }
Jet cos(const Jet& g) { return trig(g, 1); }

Jet reciprocal(const Jet& g) {
  const Complex v = g.value();
  if (v == Complex{}) throw std::domain_error("reciprocal: jet value is zero");
  std::vector<Complex> s(g.order() + 1);
  Complex p = 1.0 / v;
  for (unsigned k = 0; k <= g.order(); ++k) {
    s[k] = p;
    p *= -1.0 / v;
  }
  return compose(g, s);
}

Jet bump_jet(std::span<const double> t, unsigned order) {
  const std::size_t n = t.size();
  double tt = 0.0;
  for (double v : t) tt += v * v;
  if (tt >= 1.0) return Jet(n, order);
  Jet s(n, order);
  for (std::size_t j = 0; j < n; ++j) {
    const Jet v = Jet::variable(n, order, j, t[j]);
    s += v * v;
  }
  return exp(-reciprocal(Jet::constant(n, order, 1.0) - s));
}

// ---------------------------------------------------------------- SmoothSymbol

SmoothSymbol::SmoothSymbol(std::size_t n, unsigned order, JetFunction jet, std::string description, bool validate)
    : n_(n), order_(order), jet_(std::move(jet)), description_(std::move(description)) {
  if (n == 0) throw std::invalid_argument("SmoothSymbol: dimension must be >= 1");
  if (!validate || order == 0) return;
  constexpr double h = 1e-4;
  constexpr double tol = 1e-5;
  // Fixed probe points spread over [-2, 2]^n.
  const double probes[] = {-1.7, -0.6, 0.0, 0.45, 1.3, 1.9};
  for (std::size_t p = 0; p < std::size(probes); ++p) {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = probes[(p + 2 * j) % std::size(probes)];
    const Jet center = jet_(x, order_);
    for (const auto& alpha : enumerate_up_to(n, order_ - 1)) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Complex fd =
            (jet_(xp, order_ - 1).derivative(alpha) - jet_(xm, order_ - 1).derivative(alpha)) / (2.0 * h);
        const Complex exact = center.derivative(alpha.raised(j));
        const double err = std::abs(fd - exact) / std::max(1.0, std::abs(exact));
        validation_error_ = std::max(validation_error_, err);
        if (err > tol) {
          throw std::invalid_argument("SmoothSymbol '" + description_ + "': derivative " +
                                      alpha.raised(j).str() + " disagrees with finite differences");
        }
      }
    }
  }
}

Complex SmoothSymbol::value(std::span<const double> x) const { return jet_(x, 0).value(); }

Complex SmoothSymbol::derivative(const MultiIndex& alpha, std::span<const double> x) const {
  if (alpha.dim() != n_) throw std::invalid_argument("SmoothSymbol: derivative index has wrong dimension");
  if (alpha.degree() > order_) {
    throw std::out_of_range("SmoothSymbol '" + description_ + "': no derivative " + alpha.str() +
                            " (declared order " + std::to_string(order_) + ")");
  }
  return jet_(x, alpha.degree()).derivative(alpha);
}

Jet SmoothSymbol::jet(std::span<const double> x, unsigned order) const {
  if (order > order_) throw std::out_of_range("SmoothSymbol: jet order above declared order");
  return jet_(x, order);
}

SmoothSymbol SmoothSymbol::partial(const MultiIndex& alpha) const {
  if (alpha.degree() > order_) throw std::out_of_range("SmoothSymbol::partial: order too high");
  const unsigned k = alpha.degree();
  auto base = jet_;
  const std::size_t n = n_;
  JetFunction f = [base, alpha, k, n](std::span<const double> x, unsigned order) {
    const Jet full = base(x, order + k);
    Jet out(n, order);
    const auto idx = enumerate_up_to(n, order);
    for (std::size_t q = 0; q < idx.size(); ++q) {
      // ∂^γ(∂^α u)/γ! = ∂^{α+γ}u / γ!
      out.coefficients()[q] = full.derivative(alpha + idx[q]) / static_cast<double>(multi_factorial(idx[q]));
    }
    return out;
  };
  return SmoothSymbol(n_, order_ - k, std::move(f), "d" + alpha.str() + "[" + description_ + "]", false);
}

SmoothSymbol SmoothSymbol::inverse() const {
  auto base = jet_;
  JetFunction f = [base](std::span<const double> x, unsigned order) { return reciprocal(base(x, order)); };
  return SmoothSymbol(n_, order_, std::move(f), "1/(" + description_ + ")", false);
}

// --------------------------------------------------------------------- parser

namespace {

struct Node {
  enum Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Exp } kind;
  Complex value{};
  std::size_t var = 0;
  unsigned power = 0;
  std::shared_ptr<const Node> a, b;
};
using NodePtr = std::shared_ptr<const Node>;

Jet evaluate(const Node& e, std::span<const double> x, unsigned order) {
  const std::size_t n = x.size();
  switch (e.kind) {
    case Node::Const: return Jet::constant(n, order, e.value);
    case Node::Var: return Jet::variable(n, order, e.var, x[e.var]);
    case Node::Add: return evaluate(*e.a, x, order) + evaluate(*e.b, x, order);
    case Node::Sub: return evaluate(*e.a, x, order) - evaluate(*e.b, x, order);
    case Node::Mul: return evaluate(*e.a, x, order) * evaluate(*e.b, x, order);
    case Node::Div: return evaluate(*e.a, x, order) * reciprocal(evaluate(*e.b, x, order));
    case Node::Neg: return -evaluate(*e.a, x, order);
    case Node::Pow: {
      const Jet base = evaluate(*e.a, x, order);
      Jet r = Jet::constant(n, order, 1.0);
      for (unsigned k = 0; k < e.power; ++k) r = r * base;
      return r;
    }
    case Node::Sin: return sin(evaluate(*e.a, x, order));
    case Node::Cos: return cos(evaluate(*e.a, x, order));
    case Node::Exp: return exp(evaluate(*e.a, x, order));
  }
  throw std::logic_error("symbol: bad node");
}

class Parser {
 public:
  Parser(const std::string& text, std::size_t n) : s_(text), n_(n) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("symbol parse error at position " + std::to_string(pos_) + ": " + msg + " in \"" +
                                s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->a = std::move(a);
    node->b = std::move(b);
    return node;
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (eat('+')) e = make(Node::Add, e, term());
      else if (eat('-')) e = make(Node::Sub, e, term());
      else return e;
    }
  }
  NodePtr term() {
    NodePtr e = unary();
    for (;;) {
      if (eat('*')) e = make(Node::Mul, e, unary());
      else if (eat('/')) e = make(Node::Div, e, unary());
      else return e;
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Node::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = primary();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    auto node = std::make_shared<Node>();
    node->kind = Node::Pow;
    node->a = base;
    node->power = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    return node;
  }
  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      const double v = std::strtod(s_.c_str() + pos_, &end);
      pos_ = static_cast<std::size_t>(end - s_.c_str());
      auto node = std::make_shared<Node>();
      node->kind = Node::Const;
      node->value = v;
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (word == "i" || word == "pi") {
        auto node = std::make_shared<Node>();
        node->kind = Node::Const;
        node->value = word == "i" ? Complex(0.0, 1.0) : Complex(std::numbers::pi, 0.0);
        return node;
      }
      if (word.size() > 1 && word[0] == 'x' && word.find_first_not_of("0123456789", 1) == std::string::npos) {
        const std::size_t j = std::stoul(word.substr(1));
        if (j == 0 || j > n_) fail("coordinate " + word + " outside x1..x" + std::to_string(n_));
        auto node = std::make_shared<Node>();
        node->kind = Node::Var;
        node->var = j - 1;
        return node;
      }
      Node::Kind k;
      if (word == "sin") k = Node::Sin;
      else if (word == "cos") k = Node::Cos;
      else if (word == "exp") k = Node::Exp;
      else fail("unknown name '" + word + "'");
      if (!eat('(')) fail("expected '(' after " + word);
      NodePtr arg = expr();
      if (!eat(')')) fail("expected ')'");
      return make(k, arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

SmoothSymbol parse_symbol(const std::string& text, std::size_t n, unsigned order) {
  if (n == 0) throw std::invalid_argument("parse_symbol: dimension must be >= 1");
  NodePtr root = Parser(text, n).parse();
  SmoothSymbol::JetFunction f = [root](std::span<const double> x, unsigned k) { return evaluate(*root, x, k); };
  return SmoothSymbol(n, order, std::move(f), text);
}

}  // namespace fockgauss
