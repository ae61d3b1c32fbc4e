#include "fockgauss/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockgauss/basis.hpp"
#include "fockgauss/errors.hpp"
#include "fockgauss/kernels.hpp"
#include "fockgauss/ladder.hpp"

namespace fockgauss {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Complex dot(std::span<const double> x, std::span<const Complex> z) {
  Complex s{};
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * z[j];
  return s;
}

Complex self_dot(std::span<const Complex> z) {
  Complex s{};
  for (const auto& v : z) s += v * v;
  return s;
}

// Gf with f sampled once on the gamma rule.
class TabulatedGaussBargmann {
 public:
  TabulatedGaussBargmann(const RealFunction& f, const QuadratureRule& rule) : rule_(rule) {
    if (rule.convention() != WeightConvention::Gamma) throw std::invalid_argument("G integral: needs gamma rule");
    wf_.resize(rule.size());
    for (std::size_t q = 0; q < rule.size(); ++q) wf_[q] = rule.weights()[q] * f(rule.node(q));
  }

  Complex operator()(std::span<const Complex> z) const {
    require_dim(z.size(), rule_.dim(), "gauss_bargmann_integral");
    const Complex shift = -0.5 * self_dot(z);
    Complex acc{};
    for (std::size_t q = 0; q < rule_.size(); ++q) acc += wf_[q] * std::exp(dot(rule_.node(q), z) + shift);
    return acc;
  }

 private:
  const QuadratureRule& rule_;
  std::vector<Complex> wf_;
};

}  // namespace

Complex gauss_bargmann_integral(const RealFunction& f, std::span<const Complex> z, const QuadratureRule& rule) {
  return TabulatedGaussBargmann(f, rule)(z);
}

TabulatedInverseGaussBargmann::TabulatedInverseGaussBargmann(const ComplexFunction& g, const QuadratureRule& rule)
    : n_(rule.dim()) {
  if (rule.convention() != WeightConvention::Lambda) throw std::invalid_argument("G⁻¹ integral: needs lambda rule");
  z_.reserve(rule.size() * n_);
  values_.resize(rule.size());
  weights_.assign(rule.weights().begin(), rule.weights().end());
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto z = rule.complex_node(q);
    std::vector<Complex> zbar(n_);
    for (std::size_t j = 0; j < n_; ++j) zbar[j] = std::conj(z[j]);
    values_[q] = g(z) * std::exp(-0.5 * self_dot(zbar));
    for (std::size_t j = 0; j < n_; ++j) z_.push_back(zbar[j]);
  }
}

Complex TabulatedInverseGaussBargmann::operator()(std::span<const double> x) const {
  require_dim(x.size(), n_, "inverse_gauss_bargmann_integral");
  std::vector<Complex> terms(values_.size());
  for (std::size_t q = 0; q < values_.size(); ++q) {
    terms[q] = values_[q] * std::exp(dot(x, std::span<const Complex>(z_.data() + q * n_, n_)));
  }
  return kernels::weighted_sum(weights_, terms);
}

Complex inverse_gauss_bargmann_integral(const ComplexFunction& g, std::span<const double> x,
                                        const QuadratureRule& rule) {
  return TabulatedInverseGaussBargmann(g, rule)(x);
}

Complex bargmann_integral(const RealFunction& f, std::span<const Complex> z, const QuadratureRule& rule) {
  if (rule.convention() != WeightConvention::Lebesgue) throw std::invalid_argument("bargmann_integral: needs Lebesgue rule");
  const std::size_t n = rule.dim();
  require_dim(z.size(), n, "bargmann_integral");
  const Complex shift = -0.5 * self_dot(z);
  const RealFunction integrand = [&](std::span<const double> x) {
    double xx = 0.0;
    for (double v : x) xx += v * v;
    return f(x) * std::exp(2.0 * dot(x, z) - xx + shift);
  };
  return std::pow(2.0 / std::numbers::pi, n / 4.0) * integrate_lebesgue(integrand, rule);
}

RealFunction dilate_half(RealFunction f) {
  return [f = std::move(f)](std::span<const double> x) {
    std::vector<double> y(x.begin(), x.end());
    for (double& v : y) v *= 0.5;
    return f(y);
  };
}

RealFunction gaussian_weight_mult(RealFunction f, std::size_t n) {
  const double c = std::pow(std::numbers::pi / 2.0, n / 4.0);
  return [f = std::move(f), c](std::span<const double> x) {
    double xx = 0.0;
    for (double v : x) xx += v * v;
    return c * std::exp(0.25 * xx) * f(x);
  };
}

double verify_prop22(const RealFunction& f, const std::vector<std::vector<Complex>>& zs, const QuadratureRule& gamma,
                     const QuadratureRule& lebesgue) {
  const TabulatedGaussBargmann g(gaussian_weight_mult(dilate_half(f), gamma.dim()), gamma);
  double worst = 0.0;
  for (const auto& z : zs) worst = std::max(worst, std::abs(bargmann_integral(f, z, lebesgue) - g(z)));
  return worst;
}

Complex fock_project(const ComplexFunction& f, std::span<const Complex> z, const QuadratureRule& rule) {
  if (rule.convention() != WeightConvention::Lambda) throw std::invalid_argument("fock_project: needs lambda rule");
  require_dim(z.size(), rule.dim(), "fock_project");
  const ComplexFunction integrand = [&](std::span<const Complex> w) {
    Complex s{};
    for (std::size_t j = 0; j < w.size(); ++j) s += z[j] * std::conj(w[j]);
    return f(w) * std::exp(s);
  };
  return integrate_lambda(integrand, rule);
}

ComplexVector rotate_i(const ComplexVector& f, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("rotate_i: sign must be +1 or -1");
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("rotate_i: needs Fock tag");
  static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ComplexVector out(f.dim(), f.tag());
  for (const auto& [beta, c] : f) {
    const unsigned k = beta.degree() % 4;
    out.set(beta, c * powers[sign > 0 ? k : (4 - k) % 4]);
  }
  return out;
}

Complex weyl_eval(std::span<const double> b, const ComplexFunction& f, std::span<const Complex> z) {
  require_dim(b.size(), z.size(), "weyl_eval");
  std::vector<Complex> shifted(z.begin(), z.end());
  double bb = 0.0;
  Complex zb{};
  for (std::size_t j = 0; j < b.size(); ++j) {
    shifted[j] -= b[j];
    bb += b[j] * b[j];
    zb += z[j] * b[j];
  }
  return f(shifted) * std::exp(zb - 0.5 * bb);
}

WeylExpansion weyl_coeff(std::span<const double> b, const ComplexVector& f, unsigned N, double tolerance) {
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("weyl_coeff: needs Fock tag");
  require_dim(b.size(), f.dim(), "weyl_coeff");
  if (!f.empty() && N < f.degree()) throw std::invalid_argument("weyl_coeff: N below the degree of f");
  constexpr unsigned kExtraDegreeCap = 800;
  ComplexVector g = f;
  unsigned carried = f.empty() ? 0 : f.degree();
  // The axis factors commute, so they are applied one after the other.
  for (std::size_t j = 0; j < b.size(); ++j) {
    const double bj = b[j];
    if (bj == 0.0) continue;
    // e^{-b_j A_j} terminates after deg(g) terms.
    ComplexVector lowered = g;
    ComplexVector term = g;
    for (unsigned k = 1; !term.empty(); ++k) {
      term = annihilate(j, term);
      term *= Complex(-bj / k);
      lowered += term;
    }
    // e^{b_j A_j*}: iterate the creation series until the terms are negligible.
    ComplexVector raised = lowered;
    term = lowered;
    for (unsigned k = 1;; ++k) {
      term = create(j, term);
      term *= Complex(bj / k);
      raised += term;
      const bool past_peak = k > bj * bj + 2;
      if (past_peak && squared_norm(term) <= 1e-40 * squared_norm(raised)) break;
      if (k > N + kExtraDegreeCap) break;
    }
    raised *= Complex(std::exp(-0.5 * bj * bj));
    g = std::move(raised);
  }
  WeylExpansion out{ComplexVector(f.dim(), BasisTag::FockMonomial), 0.0, 0};
  double tail = 0.0;
  for (const auto& [beta, c] : g) {
    carried = std::max(carried, beta.degree());
    if (beta.degree() <= N) {
      out.value.set(beta, c);
    } else {
      tail += std::norm(c);
    }
  }
  out.residual = std::sqrt(tail);
  out.series_degree = carried;
  if (out.residual > tolerance) throw ResidualError("weyl_coeff", out.residual, tolerance);
  return out;
}

double verify_translation_identity(std::span<const double> t, const ComplexVector& f,
                                   const std::vector<std::vector<double>>& xs, const QuadratureRule& lambda) {
  const std::size_t n = f.dim();
  require_dim(t.size(), n, "verify_translation_identity");
  require_dim(lambda.dim(), n, "verify_translation_identity");
  const ComplexVector gf = gauss_bargmann_coeff(f);
  std::vector<double> half(t.begin(), t.end());
  for (double& v : half) v *= 0.5;
  const ComplexFunction translated = [&](std::span<const Complex> z) {
    return weyl_eval(half, [&](std::span<const Complex> w) { return eval_expansion(gf, w); }, z);
  };
  const TabulatedInverseGaussBargmann inverse(translated, lambda);
  double tt = 0.0;
  for (double v : t) tt += v * v;
  double worst = 0.0;
  for (const auto& x : xs) {
    require_dim(x.size(), n, "verify_translation_identity");
    std::vector<double> shifted(x);
    double xt = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      shifted[j] -= t[j];
      xt += x[j] * t[j];
    }
    const Complex expected = std::exp(0.5 * xt - 0.25 * tt) * eval_expansion(f, shifted);
    worst = std::max(worst, std::abs(inverse(x) - expected));
  }
  return worst;
}

Complex eval_tilde_expansion(const ComplexVector& c, std::span<const double> x) {
  require_dim(x.size(), c.dim(), "eval_tilde_expansion");
  if (c.empty()) return {};
  const unsigned d = c.degree();
  std::vector<std::vector<double>> tables(x.size(), std::vector<double>(d + 1));
  for (std::size_t j = 0; j < x.size(); ++j) kernels::hermite_tilde_table(x.subspan(j, 1), d, tables[j]);
  Complex acc{};
  for (const auto& [beta, v] : c) {
    double p = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) p *= tables[j][beta[j]];
    acc += v * p;
  }
  return acc;
}

DerivativeFunction inverse_bargmann_evaluator(const ComplexVector& f) {
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("inverse_bargmann_evaluator: needs Fock tag");
  // Derived coefficient vectors per α, filled on first use.
  auto cache = std::make_shared<std::map<MultiIndex, ComplexVector>>();
  return [f, cache](const MultiIndex& alpha, std::span<const double> x) {
    auto it = cache->find(alpha);
    if (it == cache->end()) {
      ComplexVector d = f;
      for (std::size_t j = 0; j < alpha.dim(); ++j) {
        for (unsigned k = 0; k < alpha[j]; ++k) d = annihilate(j, d) - create(j, d);
      }
      it = cache->emplace(alpha, std::move(d)).first;
    }
    return eval_tilde_expansion(it->second, x);
  };
}

ComplexVector bargmann_dx_coefficients(const RealFunction& f, std::size_t n, unsigned K, const QuadratureRule& rule) {
  if (rule.convention() != WeightConvention::Lebesgue) {
    throw std::invalid_argument("bargmann_dx_coefficients: needs Lebesgue rule");
  }
  require_dim(rule.dim(), n, "bargmann_dx_coefficients");
  const std::size_t Q = rule.size();
  std::vector<Complex> wf(Q);
  for (std::size_t q = 0; q < Q; ++q) wf[q] = rule.weights()[q] * f(rule.node(q));
  std::vector<std::vector<double>> tables(n, std::vector<double>((K + 1) * Q));
  for (std::size_t j = 0; j < n; ++j) kernels::hermite_tilde_table(rule.coordinate(j), K, tables[j]);
  ComplexVector out(n, BasisTag::FockMonomial);
  std::vector<double> row(Q);
  for (const auto& beta : enumerate_up_to(n, K)) {
    std::fill(row.begin(), row.end(), 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double* t = tables[j].data() + beta[j] * Q;
      for (std::size_t q = 0; q < Q; ++q) row[q] *= t[q];
    }
    out.set(beta, kernels::weighted_sum(row, wf));
  }
  return out;
}

}  // namespace fockgauss
