#include "fockgauss/sphi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockgauss/basis.hpp"
#include "fockgauss/errors.hpp"
#include "fockgauss/transforms.hpp"

namespace fockgauss {

namespace {

const Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Complex i_power(int k) { return kPowersOfI[((k % 4) + 4) % 4]; }

}  // namespace

double expected_kappa(std::size_t n) { return std::pow(2.0 / std::numbers::pi, n / 2.0); }

PhiFromSymbol::PhiFromSymbol(RealFunction u, std::size_t n, std::size_t count, double kappa)
    : u_(std::move(u)), n_(n), kappa_(kappa), base_(gauss_hermite_gamma(count)) {}

Complex PhiFromSymbol::operator()(std::span<const Complex> zeta) const {
  if (zeta.size() != n_) throw std::invalid_argument("phi_from_symbol: dimension mismatch");
  // With iζ_j/2 = c_j + i d_j and x_j = c_j + s/2:
  // -2(x - iζ/2)² = -s²/2 + 2i d_j s + 2 d_j².
  std::vector<double> c(n_), d(n_);
  Complex prefactor = kappa_;
  for (std::size_t j = 0; j < n_; ++j) {
    c[j] = -0.5 * zeta[j].imag();
    d[j] = 0.5 * zeta[j].real();
    prefactor *= std::sqrt(std::numbers::pi / 2.0) * std::exp(2.0 * d[j] * d[j]);
  }
  const std::size_t m = base_.size();
  std::size_t total = 1;
  for (std::size_t j = 0; j < n_; ++j) total *= m;
  std::vector<std::size_t> idx(n_, 0);
  std::vector<double> y(n_);
  Complex acc{};
  for (std::size_t q = 0; q < total; ++q) {
    double w = 1.0;
    double phase = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      const double s = base_.nodes[idx[j]];
      w *= base_.weights[idx[j]];
      phase += 2.0 * d[j] * s;
      y[j] = 2.0 * (c[j] + 0.5 * s);  // u is evaluated at 2x
    }
    acc += w * u_(y) * std::polar(1.0, phase);
    for (std::size_t j = n_; j-- > 0;) {
      if (++idx[j] < m) break;
      idx[j] = 0;
    }
  }
  return prefactor * acc;
}

Complex phi_from_symbol(const SmoothSymbol& u, std::span<const Complex> zeta, std::size_t count, double kappa) {
  return PhiFromSymbol([&u](std::span<const double> x) { return u.value(x); }, u.dim(), count, kappa)(zeta);
}

Complex sphi_direct(const ComplexFunction& phi, const ComplexFunction& f, std::span<const Complex> z,
                    const QuadratureRule& lambda) {
  if (lambda.convention() != WeightConvention::Lambda) throw std::invalid_argument("sphi_direct: needs lambda rule");
  const std::size_t n = lambda.dim();
  if (z.size() != n) throw std::invalid_argument("sphi_direct: dimension mismatch");
  std::vector<Complex> arg(n);
  const ComplexFunction integrand = [&](std::span<const Complex> w) {
    Complex zw{};
    for (std::size_t j = 0; j < n; ++j) {
      zw += z[j] * std::conj(w[j]);
      arg[j] = z[j] - std::conj(w[j]);
    }
    return f(w) * std::exp(zw) * phi(arg);
  };
  return integrate_lambda(integrand, lambda);
}

Calibration calibrate_normalization(std::size_t n, const SphiQuadrature& q, double tolerance) {
  const PhiFromSymbol raw([](std::span<const double>) { return Complex(1.0, 0.0); }, n, q.phi_count, 1.0);
  const QuadratureRule lambda = lambda_rule(q.lambda_count, n, q.lambda_a_re, q.lambda_a_im);
  Calibration cal;
  cal.raw_phi_at_zero = raw(std::vector<Complex>(n, Complex{}));

  // Probe points and basis vectors e_β, |β| <= 3.
  const std::vector<Complex> samples = {{0.4, 0.3}, {-0.7, 0.5}};
  std::vector<double> quotients;
  for (const auto& s : samples) {
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = s * Complex(1.0, 0.25 * static_cast<double>(j));
    // φ(z - w̄) does not depend on β; tabulate it once per z.
    std::vector<Complex> kernel(lambda.size());
    std::vector<Complex> arg(n);
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      const auto w = lambda.complex_node(k);
      Complex zw{};
      for (std::size_t j = 0; j < n; ++j) {
        zw += z[j] * std::conj(w[j]);
        arg[j] = z[j] - std::conj(w[j]);
      }
      kernel[k] = lambda.weights()[k] * std::exp(zw) * raw(arg);
    }
    for (const auto& beta : enumerate_up_to(n, 3)) {
      Complex acc{};
      for (std::size_t k = 0; k < lambda.size(); ++k) acc += kernel[k] * fock_eval(beta, lambda.complex_node(k));
      const Complex ratio = fock_eval(beta, z) / acc;
      if (std::abs(ratio.imag()) > tolerance) {
        throw ResidualError("calibrate_normalization: non-real quotient", std::abs(ratio.imag()), tolerance);
      }
      quotients.push_back(ratio.real());
    }
  }
  double sum = 0.0;
  for (double v : quotients) sum += v;
  cal.kappa = sum / static_cast<double>(quotients.size());
  for (double v : quotients) cal.spread = std::max(cal.spread, std::abs(v - cal.kappa));
  if (cal.spread > tolerance) throw ResidualError("calibrate_normalization: quotients disagree", cal.spread, tolerance);
  return cal;
}

GalerkinMatrix sphi_direct_matrix(const ComplexFunction& phi, unsigned N, const SphiQuadrature& q, double radius,
                                  std::size_t circle_points) {
  if (circle_points <= 2 * static_cast<std::size_t>(N)) {
    throw std::invalid_argument("sphi_direct_matrix: too few circle points for degree N");
  }
  const QuadratureRule lambda = lambda_rule(q.lambda_count, 1, q.lambda_a_re, q.lambda_a_im);
  const std::size_t Q = lambda.size();
  const std::size_t M = circle_points;
  std::vector<Complex> w(Q);
  for (std::size_t k = 0; k < Q; ++k) w[k] = lambda.complex_node(k)[0];
  // E[p][k] = weight_k e^{z_p w̄_k} φ(z_p - w̄_k)
  std::vector<Complex> z(M);
  std::vector<Complex> E(M * Q);
  for (std::size_t p = 0; p < M; ++p) {
    z[p] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(M));
    for (std::size_t k = 0; k < Q; ++k) {
      const Complex arg = z[p] - std::conj(w[k]);
      E[p * Q + k] = lambda.weights()[k] * std::exp(z[p] * std::conj(w[k])) * phi(std::span<const Complex>(&arg, 1));
    }
  }
  GalerkinMatrix D;
  D.n = 1;
  D.tag = BasisTag::FockMonomial;
  D.degree = N;
  D.index = enumerate_up_to(1, N);
  D.entries = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  std::vector<Complex> values(M);
  for (unsigned beta = 0; beta <= N; ++beta) {
    const MultiIndex b{beta};
    std::vector<Complex> eb(Q);
    for (std::size_t k = 0; k < Q; ++k) eb[k] = fock_eval(b, std::span<const Complex>(&w[k], 1));
    for (std::size_t p = 0; p < M; ++p) {
      Complex acc{};
      for (std::size_t k = 0; k < Q; ++k) acc += E[p * Q + k] * eb[k];
      values[p] = acc;
    }
    for (unsigned alpha = 0; alpha <= N; ++alpha) {
      Complex a{};
      for (std::size_t p = 0; p < M; ++p) {
        a += values[p] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(p * alpha) /
                                               static_cast<double>(M));
      }
      a /= static_cast<double>(M) * std::pow(radius, alpha);
      // z^α coefficient times sqrt(α!) is the e_α coefficient.
      D.entries(alpha, beta) = a * std::sqrt(static_cast<double>(multi_factorial(MultiIndex{alpha})));
    }
  }
  return D;
}

GalerkinMatrix sphi_factored_matrix(const GalerkinMatrix& T) {
  if (T.tag != BasisTag::HermiteGamma) throw std::invalid_argument("sphi_factored_matrix: needs a Hermite matrix");
  GalerkinMatrix F = T;
  F.tag = BasisTag::FockMonomial;
  for (std::size_t a = 0; a < T.side(); ++a) {
    for (std::size_t b = 0; b < T.side(); ++b) {
      const int k = static_cast<int>(T.index[a].degree()) - static_cast<int>(T.index[b].degree());
      F.entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *= i_power(k);
    }
  }
  return F;
}

ComplexVector sphi_factored(const SmoothSymbol& u, const ComplexVector& f, unsigned N, std::size_t count) {
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("sphi_factored: needs Fock tag");
  if (!f.empty() && f.degree() > N) throw std::invalid_argument("sphi_factored: N below the degree of f");
  const GalerkinMatrix T = galerkin_multiplier(u, N, count);
  // C_{-i}, G⁻¹, M_u, G, C_i in turn.
  const ComplexVector h = inverse_gauss_bargmann_coeff(rotate_i(f, -1));
  return rotate_i(gauss_bargmann_coeff(T.apply(h)), +1);
}

namespace {

BlockResidual block_residual(const Eigen::MatrixXcd& R, std::size_t n, unsigned N, unsigned inner) {
  if (inner > N) throw std::invalid_argument("inner block degree above truncation");
  BlockResidual r;
  r.degree = N;
  r.inner_degree = inner;
  const auto s = static_cast<Eigen::Index>(enumerate_up_to(n, inner).size());
  r.inner = R.topLeftCorner(s, s).norm();
  r.full = R.norm();
  return r;
}

}  // namespace

BlockResidual commutation_check(const SmoothSymbol& u, const SmoothSymbol& v, unsigned N, std::size_t count,
                                unsigned inner_degree) {
  if (u.dim() != v.dim()) throw std::invalid_argument("commutation_check: dimension mismatch");
  const GalerkinMatrix tu = galerkin_multiplier(u, N, count);
  const GalerkinMatrix tv = galerkin_multiplier(v, N, count);
  const Eigen::MatrixXcd c = tu.entries * tv.entries - tv.entries * tu.entries;
  return block_residual(c, u.dim(), N, inner_degree);
}

BlockResidual invertibility_check(const SmoothSymbol& u, unsigned N, std::size_t count,
                                  const std::vector<std::vector<double>>& probe_grid, unsigned inner_degree) {
  double low = std::numeric_limits<double>::infinity();
  for (const auto& x : probe_grid) low = std::min(low, std::abs(u.value(x)));
  if (!(low > 1e-6)) {
    throw PreconditionError("invertibility_check: |u| reaches " + std::to_string(low) + " on the probe grid; '" +
                            u.description() + "' is not bounded away from zero");
  }
  const GalerkinMatrix tu = galerkin_multiplier(u, N, count);
  const GalerkinMatrix ti = galerkin_multiplier(u.inverse(), N, count);
  const Eigen::MatrixXcd r =
      tu.entries * ti.entries - Eigen::MatrixXcd::Identity(tu.entries.rows(), tu.entries.cols());
  return block_residual(r, u.dim(), N, inner_degree);
}

}  // namespace fockgauss
