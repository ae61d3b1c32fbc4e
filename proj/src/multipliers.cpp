#include "fockgauss/multipliers.hpp"

#include <cmath>
#include <stdexcept>

#include "fockgauss/errors.hpp"
#include "fockgauss/kernels.hpp"

namespace fockgauss {

namespace {

Eigen::MatrixXcd assemble(const RealFunction& u, std::size_t n, const std::vector<MultiIndex>& index, unsigned N,
                          std::size_t count) {
  const QuadratureRule rule = gamma_rule(count, n);
  const std::size_t Q = rule.size();
  const std::size_t B = index.size();
  std::vector<std::vector<double>> axis(n, std::vector<double>((N + 1) * Q));
  for (std::size_t j = 0; j < n; ++j) kernels::hermite_table(rule.coordinate(j), N, axis[j]);
  std::vector<double> table(B * Q, 1.0);
  for (std::size_t b = 0; b < B; ++b) {
    double* row = table.data() + b * Q;
    for (std::size_t j = 0; j < n; ++j) {
      const double* t = axis[j].data() + index[b][j] * Q;
      for (std::size_t q = 0; q < Q; ++q) row[q] *= t[q];
    }
  }
  std::vector<double> w_re(Q), w_im(Q);
  for (std::size_t q = 0; q < Q; ++q) {
    const Complex v = u(rule.node(q));
    w_re[q] = rule.weights()[q] * v.real();
    w_im[q] = rule.weights()[q] * v.imag();
  }
  std::vector<double> g_re(B * B), g_im(B * B);
  kernels::weighted_gram(table, B, Q, w_re, g_re);
  kernels::weighted_gram(table, B, Q, w_im, g_im);
  Eigen::MatrixXcd m(B, B);
  for (std::size_t a = 0; a < B; ++a) {
    for (std::size_t b = 0; b < B; ++b) m(a, b) = Complex(g_re[a * B + b], g_im[a * B + b]);
  }
  return m;
}

}  // namespace

GalerkinMatrix GalerkinMatrix::block(unsigned k) const {
  if (k > degree) throw std::out_of_range("GalerkinMatrix::block: degree above truncation");
  GalerkinMatrix b;
  b.n = n;
  b.tag = tag;
  b.degree = k;
  b.index = enumerate_up_to(n, k);
  const auto s = static_cast<Eigen::Index>(b.index.size());
  b.entries = entries.topLeftCorner(s, s);
  b.residual = residual;
  return b;
}

ComplexVector GalerkinMatrix::apply(const ComplexVector& f) const {
  if (f.dim() != n) throw std::invalid_argument("GalerkinMatrix::apply: dimension mismatch");
  if (!f.empty() && f.degree() > degree) throw std::invalid_argument("GalerkinMatrix::apply: input above truncation");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(side()));
  for (std::size_t k = 0; k < side(); ++k) v[static_cast<Eigen::Index>(k)] = f.at(index[k]);
  const Eigen::VectorXcd r = entries * v;
  ComplexVector out(n, f.tag());
  for (std::size_t k = 0; k < side(); ++k) out.set(index[k], r[static_cast<Eigen::Index>(k)]);
  return out;
}

GalerkinMatrix galerkin_multiplier(const RealFunction& u, std::size_t n, unsigned N, std::size_t count,
                                   double tolerance) {
  GalerkinMatrix g;
  g.n = n;
  g.degree = N;
  g.index = enumerate_up_to(n, N);
  const Eigen::MatrixXcd coarse = assemble(u, n, g.index, N, count);
  g.entries = assemble(u, n, g.index, N, 2 * count);
  g.residual = (g.entries - coarse).cwiseAbs().maxCoeff();
  if (g.residual > tolerance) throw ResidualError("galerkin_multiplier", g.residual, tolerance);
  return g;
}

GalerkinMatrix galerkin_multiplier(const SmoothSymbol& u, unsigned N, std::size_t count, double tolerance) {
  return galerkin_multiplier([&u](std::span<const double> x) { return u.value(x); }, u.dim(), N, count, tolerance);
}

double sobolev_gram_weight(const MultiIndex& beta, unsigned m) {
  double s = 0.0;
  for (const auto& alpha : enumerate_up_to(beta.dim(), m)) s += static_cast<double>(falling_product(beta, alpha));
  return s;
}

double sobolev_operator_norm(const GalerkinMatrix& T, unsigned m_in, unsigned m_out) {
  const auto s = static_cast<Eigen::Index>(T.side());
  Eigen::VectorXd out(s), in(s);
  for (Eigen::Index k = 0; k < s; ++k) {
    out[k] = std::sqrt(sobolev_gram_weight(T.index[static_cast<std::size_t>(k)], m_out));
    in[k] = 1.0 / std::sqrt(sobolev_gram_weight(T.index[static_cast<std::size_t>(k)], m_in));
  }
  const Eigen::MatrixXcd scaled = out.asDiagonal() * T.entries * in.asDiagonal();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(scaled);
  if (svd.info() != Eigen::Success) throw std::runtime_error("sobolev_operator_norm: SVD failed");
  return svd.singularValues()(0);
}

double lemma33_bound(const SmoothSymbol& u, unsigned m, const std::vector<std::vector<double>>& grid) {
  if (m > u.order()) {
    throw std::out_of_range("lemma33_bound: symbol '" + u.description() + "' has no derivatives of order " +
                            std::to_string(m));
  }
  const auto alphas = enumerate_up_to(u.dim(), m);
  std::vector<double> sup(alphas.size(), 0.0);
  for (const auto& x : grid) {
    const Jet j = u.jet(x, m);
    for (std::size_t k = 0; k < alphas.size(); ++k) sup[k] = std::max(sup[k], std::abs(j.derivative(alphas[k])));
  }
  double total = 0.0;
  for (double v : sup) total += v;
  return total;
}

SmoothSymbol mollify(const SmoothSymbol& u, double r, unsigned order, std::size_t points) {
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("mollify: radius must lie in (0, 1]");
  if (points < 2) throw std::invalid_argument("mollify: need at least 2 grid intervals");
  const std::size_t n = u.dim();
  const double h = 2.0 / static_cast<double>(points);
  // Interior grid points of [-1, 1]^n inside the unit ball, with their bump jets.
  struct Sample {
    std::vector<double> s;
    std::vector<Complex> k;  // ∂^γ K(s) / γ!
  };
  auto samples = std::make_shared<std::vector<Sample>>();
  double mass = 0.0;
  std::vector<std::size_t> idx(n, 1);
  for (;;) {
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = -1.0 + h * static_cast<double>(idx[j]);
    const Jet kj = bump_jet(s, order);
    if (kj.value() != Complex{}) {
      mass += kj.value().real();
      samples->push_back({s, kj.coefficients()});
    }
    std::size_t j = n;
    while (j-- > 0) {
      if (++idx[j] < points) break;
      idx[j] = 1;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  const double scale = 1.0 / mass;  // the cell volume h^n cancels
  const auto alphas = enumerate_up_to(n, order);
  SmoothSymbol::JetFunction f = [u, r, samples, scale, alphas, n](std::span<const double> x, unsigned k) {
    Jet out(n, k);
    auto& c = out.coefficients();
    std::vector<double> y(n);
    for (const auto& smp : *samples) {
      for (std::size_t j = 0; j < n; ++j) y[j] = x[j] - r * smp.s[j];
      const Complex v = u.value(y);
      for (std::size_t q = 0; q < c.size(); ++q) c[q] += smp.k[q] * v;
    }
    for (std::size_t q = 0; q < c.size(); ++q) c[q] *= scale * std::pow(r, -static_cast<double>(alphas[q].degree()));
    return out;
  };
  return SmoothSymbol(n, order, std::move(f), "mollify(" + u.description() + ", r=" + std::to_string(r) + ")");
}

Theorem36Quantities theorem36_quantities(const SmoothSymbol& u, unsigned m, unsigned N, std::size_t count) {
  if (m > u.order()) throw std::out_of_range("theorem36_quantities: symbol order below m");
  if (N < 2) throw std::invalid_argument("theorem36_quantities: N must be >= 2");
  Theorem36Quantities q;
  q.degree = N;
  const GalerkinMatrix tu = galerkin_multiplier(u, N, count);
  q.residual = tu.residual;
  std::vector<GalerkinMatrix> td;
  for (const auto& alpha : enumerate_degree(u.dim(), m)) {
    td.push_back(galerkin_multiplier(u.partial(alpha), N, count));
    q.residual = std::max(q.residual, td.back().residual);
  }
  auto evaluate = [&](unsigned deg, double& lhs, double& rhs) {
    const GalerkinMatrix b = tu.block(deg);
    lhs = sobolev_operator_norm(b, m, m);
    rhs = sobolev_operator_norm(b, 0, 0);
    for (const auto& t : td) rhs += sobolev_operator_norm(t.block(deg), m, 0);
  };
  evaluate(N, q.lhs, q.rhs);
  evaluate(N - 2, q.lhs_prev, q.rhs_prev);
  return q;
}

LogConvexityProbe log_convexity_probe(const SmoothSymbol& u, unsigned N, std::size_t count) {
  LogConvexityProbe p;
  const GalerkinMatrix tu = galerkin_multiplier(u, N, count);
  for (unsigned m = 0; m < 3; ++m) p.lhs[m] = sobolev_operator_norm(tu, m, m);
  p.midpoint_ratio = p.lhs[1] / std::sqrt(p.lhs[0] * p.lhs[2]);
  p.within_slack = p.midpoint_ratio <= 1.10;
  return p;
}

}  // namespace fockgauss
