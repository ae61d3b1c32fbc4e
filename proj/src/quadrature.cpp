#include "fockgauss/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockgauss/kernels.hpp"

namespace fockgauss {

namespace {

// h_{c-1}(x) and h_c(x) with a running power-of-two scale so large nodes and
// large counts do not overflow. Returns log|h_{c-1}| via log_scale.
struct ScaledPair {
  double prev = 0.0;  // h_{c-1} / 2^e
  double last = 0.0;  // h_c / 2^e
  double log_scale = 0.0;
};

ScaledPair hermite_pair(std::size_t c, double x) {
  ScaledPair p;
  double hm1 = 0.0;
  double h = 1.0;
  for (std::size_t k = 0; k < c; ++k) {
    const double next = (x * h - std::sqrt(static_cast<double>(k)) * hm1) / std::sqrt(static_cast<double>(k + 1));
    hm1 = h;
    h = next;
    if (std::abs(h) > 1e150) {
      h *= 1e-150;
      hm1 *= 1e-150;
      p.log_scale += 150.0 * std::numbers::ln10;
    }
  }
  p.prev = hm1;
  p.last = h;
  return p;
}

void require_convention(const QuadratureRule& rule, WeightConvention c, const char* what) {
  if (rule.convention() != c) {
    throw std::invalid_argument(std::string(what) + ": rule has convention " + to_string(rule.convention()) +
                                ", expected " + to_string(c));
  }
}

Complex integrate_real(const RealFunction& f, const QuadratureRule& rule) {
  std::vector<Complex> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) values[i] = f(rule.node(i));
  return kernels::weighted_sum(rule.weights(), values);
}

}  // namespace

const char* to_string(WeightConvention c) noexcept {
  switch (c) {
    case WeightConvention::Gamma: return "gamma";
    case WeightConvention::Lambda: return "lambda";
    case WeightConvention::ScaledGaussian: return "scaled-gaussian";
    case WeightConvention::Lebesgue: return "lebesgue";
  }
  return "?";
}

Rule1D gauss_hermite_gamma(std::size_t count) {
  if (count == 0) throw std::invalid_argument("gauss_hermite_gamma: count must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(count));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(count > 1 ? count - 1 : 0));
  for (Eigen::Index k = 0; k < sub.size(); ++k) sub[k] = std::sqrt(static_cast<double>(k + 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_hermite_gamma: eigen iteration failed");

  std::vector<double> x(solver.eigenvalues().data(), solver.eigenvalues().data() + count);
  std::sort(x.begin(), x.end());
  std::vector<double> w(count);
  const double c = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (int it = 0; it < 3; ++it) {
      const ScaledPair p = hermite_pair(count, x[i]);
      // h_c' = sqrt(c) h_{c-1}
      x[i] -= p.last / (std::sqrt(c) * p.prev);
    }
    const ScaledPair p = hermite_pair(count, x[i]);
    w[i] = std::exp(-std::log(c) - 2.0 * (std::log(std::abs(p.prev)) + p.log_scale));
  }
  // Symmetric about 0: average mirrored pairs; the middle node of an odd rule is 0.
  for (std::size_t i = 0; i < count / 2; ++i) {
    const std::size_t j = count - 1 - i;
    const double xs = 0.5 * (x[j] - x[i]);
    const double ws = 0.5 * (w[i] + w[j]);
    x[i] = -xs;
    x[j] = xs;
    w[i] = w[j] = ws;
  }
  if (count % 2 == 1) x[count / 2] = 0.0;
  // Sum to one exactly up to rounding.
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return {std::move(x), std::move(w)};
}

QuadratureRule::QuadratureRule(std::size_t axes, WeightConvention convention, std::vector<double> nodes,
                               std::vector<double> weights)
    : axes_(axes), convention_(convention), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (axes_ == 0) throw std::invalid_argument("QuadratureRule: zero axes");
  if (nodes_.size() != axes_ * weights_.size()) throw std::invalid_argument("QuadratureRule: shape mismatch");
  if (convention_ == WeightConvention::Lambda && axes_ % 2 != 0) {
    throw std::invalid_argument("QuadratureRule: lambda rule needs an even number of real axes");
  }
}

std::size_t QuadratureRule::dim() const noexcept {
  return convention_ == WeightConvention::Lambda ? axes_ / 2 : axes_;
}

std::vector<Complex> QuadratureRule::complex_node(std::size_t i) const {
  const std::size_t n = axes_ / 2;
  const auto p = node(i);
  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = {p[j], p[n + j]};
  return z;
}

std::vector<double> QuadratureRule::coordinate(std::size_t j) const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = nodes_[i * axes_ + j];
  return out;
}

QuadratureRule tensorize(const std::vector<Rule1D>& per_axis, WeightConvention convention, std::size_t cap) {
  if (per_axis.empty()) throw std::invalid_argument("tensorize: no axes");
  std::size_t total = 1;
  for (const auto& r : per_axis) {
    if (r.size() == 0) throw std::invalid_argument("tensorize: empty axis rule");
    if (total > cap / r.size()) {
      throw std::length_error("tensorize: tensor rule exceeds the node cap of " + std::to_string(cap));
    }
    total *= r.size();
  }
  const std::size_t axes = per_axis.size();
  std::vector<double> nodes(total * axes);
  std::vector<double> weights(total);
  std::vector<std::size_t> idx(axes, 0);
  for (std::size_t q = 0; q < total; ++q) {
    double w = 1.0;
    for (std::size_t j = 0; j < axes; ++j) {
      nodes[q * axes + j] = per_axis[j].nodes[idx[j]];
      w *= per_axis[j].weights[idx[j]];
    }
    weights[q] = w;
    // Last axis fastest.
    for (std::size_t j = axes; j-- > 0;) {
      if (++idx[j] < per_axis[j].size()) break;
      idx[j] = 0;
    }
  }
  return {axes, convention, std::move(nodes), std::move(weights)};
}

QuadratureRule tensorize(const Rule1D& rule, std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("tensorize: dimension must be >= 1");
  return tensorize(std::vector<Rule1D>(n, rule), WeightConvention::Gamma, cap);
}

Rule1D scale_rule(const Rule1D& gamma, double a, double center) {
  if (!(a > 0)) throw std::invalid_argument("scale_rule: exponent must be positive");
  Rule1D r;
  r.nodes.resize(gamma.size());
  r.weights.resize(gamma.size());
  const double s = 1.0 / std::sqrt(2.0 * a);
  const double m = std::sqrt(std::numbers::pi / a);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    r.nodes[i] = center + gamma.nodes[i] * s;
    r.weights[i] = gamma.weights[i] * m;
  }
  return r;
}

QuadratureRule gamma_rule(std::size_t count, std::size_t n, std::size_t cap) {
  return tensorize(gauss_hermite_gamma(count), n, cap);
}

QuadratureRule lambda_rule(std::size_t count, std::size_t n, double a_re, double a_im, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("lambda_rule: dimension must be >= 1");
  const Rule1D base = gauss_hermite_gamma(count);
  // Per real axis the target weight is e^{-t^2}/sqrt(pi) dt.
  auto dressed = [&](double a) {
    Rule1D r = scale_rule(base, a);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double t = r.nodes[i];
      r.weights[i] *= std::exp((a - 1.0) * t * t) / std::sqrt(std::numbers::pi);
    }
    return r;
  };
  const Rule1D re = dressed(a_re);
  const Rule1D im = dressed(a_im);
  std::vector<Rule1D> axes(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    axes[j] = re;
    axes[n + j] = im;
  }
  return tensorize(axes, WeightConvention::Lambda, cap);
}

QuadratureRule scaled_gaussian_rule(std::size_t count, std::size_t n, double a, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("scaled_gaussian_rule: dimension must be >= 1");
  return tensorize(std::vector<Rule1D>(n, scale_rule(gauss_hermite_gamma(count), a)),
                   WeightConvention::ScaledGaussian, cap);
}

QuadratureRule lebesgue_rule(std::size_t count, std::size_t n, double a, double center, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("lebesgue_rule: dimension must be >= 1");
  const Rule1D base = gauss_hermite_gamma(count);
  Rule1D r = scale_rule(base, a, center);
  for (std::size_t i = 0; i < r.size(); ++i) {
    // e^{a (t-c)^2} = e^{s^2/2}; folded in as a log to keep tiny weights accurate.
    const double s = base.nodes[i];
    r.weights[i] = std::exp(std::log(base.weights[i]) + 0.5 * s * s) * std::sqrt(std::numbers::pi / a);
  }
  return tensorize(std::vector<Rule1D>(n, r), WeightConvention::Lebesgue, cap);
}

Complex integrate_gamma(const RealFunction& f, const QuadratureRule& rule) {
  require_convention(rule, WeightConvention::Gamma, "integrate_gamma");
  return integrate_real(f, rule);
}

Complex integrate_scaled_gaussian(const RealFunction& f, const QuadratureRule& rule) {
  require_convention(rule, WeightConvention::ScaledGaussian, "integrate_scaled_gaussian");
  return integrate_real(f, rule);
}

Complex integrate_lebesgue(const RealFunction& f, const QuadratureRule& rule) {
  require_convention(rule, WeightConvention::Lebesgue, "integrate_lebesgue");
  return integrate_real(f, rule);
}

Complex integrate_lambda(const ComplexFunction& f, const QuadratureRule& rule) {
  require_convention(rule, WeightConvention::Lambda, "integrate_lambda");
  std::vector<Complex> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto z = rule.complex_node(i);
    values[i] = f(z);
  }
  return kernels::weighted_sum(rule.weights(), values);
}

}  // namespace fockgauss
