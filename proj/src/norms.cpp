#include "fockgauss/norms.hpp"

#include <cmath>
#include <limits>

#include "fockgauss/errors.hpp"
#include "fockgauss/ladder.hpp"

namespace fockgauss {

namespace {

double combine(const std::map<MultiIndex, double>& squares, SobolevConvention convention) {
  double acc = 0.0;
  for (const auto& [alpha, sq] : squares) acc += convention == SobolevConvention::SumOfNorms ? std::sqrt(sq) : sq;
  return convention == SobolevConvention::SumOfNorms ? acc : std::sqrt(acc);
}

double dx_norm_at(const DerivativeFunction& f, unsigned m, std::size_t n, const LebesgueSampling& s,
                  std::size_t count, SobolevConvention convention) {
  const QuadratureRule rule = lebesgue_rule(count, n, s.a, s.center);
  std::map<MultiIndex, double> squares;
  for (const auto& alpha : enumerate_up_to(n, m)) {
    const RealFunction g = [&](std::span<const double> x) { return Complex(std::norm(f(alpha, x)), 0.0); };
    squares.emplace(alpha, integrate_lebesgue(g, rule).real());
  }
  return combine(squares, convention);
}

}  // namespace

const char* to_string(SobolevConvention c) noexcept {
  return c == SobolevConvention::SumOfNorms ? "sum-of-norms (l1)" : "hilbertian (l2)";
}

double gauss_sobolev_norm(const ComplexVector& f, unsigned m, SobolevConvention convention) {
  detail::require_hermite(f, "gauss_sobolev_norm");
  return combine(squared_seminorms(f, m), convention);
}

double fock_sobolev_norm(const ComplexVector& f, unsigned m, SobolevConvention convention) {
  if (f.tag() != BasisTag::FockMonomial) throw std::invalid_argument("fock_sobolev_norm: needs Fock tag");
  return combine(squared_seminorms(f, m), convention);
}

double weighted_fock_norm(const ComplexVector& f, unsigned m) { return std::sqrt(weighted_fock_squared_norm(f, m)); }

double bessel_norm(const ComplexVector& f, double s) {
  detail::require_hermite(f, "bessel_norm");
  double acc = 0.0;
  for (const auto& [beta, c] : f) acc += std::pow(1.0 + beta.degree(), s) * std::norm(c);
  return std::sqrt(acc);
}

namespace {

// Extremes of h(q) / sqrt(d·q) over q >= 0, where h combines the seminorm
// squares (F q)_a. On the slice d·q = 1 the vertices are e_b / d_b.
struct ConcaveExtremes {
  double vertex_min = 0.0;
  double vertex_max = 0.0;
  double fw_max = 0.0;  // Frank-Wolfe maximum (sum-of-norms only)
  double gap = 0.0;
  std::size_t iterations = 0;
};

ConcaveExtremes concave_ratio_extremes(const std::vector<std::vector<double>>& F, const std::vector<double>& d,
                                       SobolevConvention convention) {
  const std::size_t A = F.size();
  const std::size_t B = d.size();
  auto numerator = [&](const std::vector<double>& q) {
    double acc = 0.0;
    for (std::size_t a = 0; a < A; ++a) {
      double v = 0.0;
      for (std::size_t b = 0; b < B; ++b) v += F[a][b] * q[b];
      acc += convention == SobolevConvention::SumOfNorms ? std::sqrt(v) : v;
    }
    return convention == SobolevConvention::SumOfNorms ? acc : std::sqrt(acc);
  };
  ConcaveExtremes r;
  r.vertex_min = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < B; ++b) {
    std::vector<double> q(B, 0.0);
    q[b] = 1.0 / d[b];
    const double v = numerator(q);
    r.vertex_min = std::min(r.vertex_min, v);
    r.vertex_max = std::max(r.vertex_max, v);
  }
  r.fw_max = r.vertex_max;
  // A linear-fractional ratio has no interior extremum.
  if (convention == SobolevConvention::Hilbertian) return r;

  // Pairwise Frank-Wolfe: mass moves from the worst active vertex to the best
  // one, which converges linearly on a polytope.
  std::vector<double> q(B);
  for (std::size_t b = 0; b < B; ++b) q[b] = 1.0 / (d[b] * static_cast<double>(B));
  std::vector<double> grad(B), lin(A), delta(A);
  auto h_of = [&](const std::vector<double>& l) {
    double acc = 0.0;
    for (double v : l) acc += std::sqrt(std::max(v, 0.0));
    return acc;
  };
  for (std::size_t it = 0; it < 5000; ++it) {
    for (std::size_t a = 0; a < A; ++a) {
      lin[a] = 0.0;
      for (std::size_t b = 0; b < B; ++b) lin[a] += F[a][b] * q[b];
    }
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t a = 0; a < A; ++a) {
      if (lin[a] <= 0.0) continue;
      const double g = 0.5 / std::sqrt(lin[a]);
      for (std::size_t b = 0; b < B; ++b) grad[b] += g * F[a][b];
    }
    std::size_t best = 0;
    std::size_t worst = B;
    for (std::size_t b = 0; b < B; ++b) {
      if (grad[b] / d[b] > grad[best] / d[best]) best = b;
      if (q[b] > 0.0 && (worst == B || grad[b] / d[b] < grad[worst] / d[worst])) worst = b;
    }
    // Concavity: h(q*) <= h(q) + grad·(v_best - q).
    double gap = grad[best] / d[best];
    for (std::size_t b = 0; b < B; ++b) gap -= grad[b] * q[b];
    const double current = h_of(lin);
    r.fw_max = std::max(r.fw_max, current);
    r.gap = std::max(0.0, current + gap - r.fw_max);
    r.iterations = it + 1;
    if (gap <= 1e-13 * current || best == worst) break;
    // Step t moves t/d_best onto best and t/d_worst off worst, t <= q_worst d_worst.
    const double t_max = q[worst] * d[worst];
    for (std::size_t a = 0; a < A; ++a) delta[a] = F[a][best] / d[best] - F[a][worst] / d[worst];
    auto along = [&](double t) {
      double acc = 0.0;
      for (std::size_t a = 0; a < A; ++a) acc += std::sqrt(std::max(lin[a] + t * delta[a], 0.0));
      return acc;
    };
    double lo = 0.0, hi = t_max;
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int k = 0; k < 80; ++k) {
      const double m1 = hi - golden * (hi - lo);
      const double m2 = lo + golden * (hi - lo);
      if (along(m1) < along(m2)) lo = m1;
      else hi = m2;
    }
    double t = 0.5 * (lo + hi);
    if (along(t_max) >= along(t)) t = t_max;  // drop the vertex entirely
    q[best] += t / d[best];
    q[worst] = t == t_max ? 0.0 : q[worst] - t / d[worst];
  }
  return r;
}

std::vector<std::vector<double>> falling_matrix(const std::vector<MultiIndex>& alphas,
                                                const std::vector<MultiIndex>& basis) {
  std::vector<std::vector<double>> F(alphas.size(), std::vector<double>(basis.size()));
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) F[a][b] = static_cast<double>(falling_product(basis[b], alphas[a]));
  }
  return F;
}

}  // namespace

RatioExtremes sobolev_bessel_ratio_extremes(std::size_t n, unsigned N, unsigned s, SobolevConvention convention) {
  const auto basis = enumerate_up_to(n, N);
  std::vector<double> d(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) d[b] = std::pow(1.0 + basis[b].degree(), static_cast<double>(s));
  const ConcaveExtremes c = concave_ratio_extremes(falling_matrix(enumerate_up_to(n, s), basis), d, convention);
  return {c.vertex_min, c.fw_max, c.gap, c.iterations};
}

RatioExtremes weighted_sobolev_ratio_extremes(std::size_t n, unsigned N, unsigned m, SobolevConvention convention) {
  const auto basis = enumerate_up_to(n, N);
  std::vector<double> w(basis.size(), 0.0);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (const auto& k : enumerate_degree(n, m)) {
      w[b] += static_cast<double>(multinomial(k)) * static_cast<double>(falling_product(basis[b] + k, k));
    }
  }
  // The ratio is the reciprocal of h(q) / sqrt(w·q).
  const ConcaveExtremes c = concave_ratio_extremes(falling_matrix(enumerate_up_to(n, m), basis), w, convention);
  RatioExtremes r;
  r.min = 1.0 / c.fw_max;
  r.max = 1.0 / c.vertex_min;
  r.gap = r.min - 1.0 / (c.fw_max + c.gap);
  r.iterations = c.iterations;
  return r;
}

QuadratureEstimate classical_sobolev_norm_dx(const DerivativeFunction& f, unsigned m, std::size_t n,
                                             const LebesgueSampling& sampling, double tolerance,
                                             SobolevConvention convention) {
  const double coarse = dx_norm_at(f, m, n, sampling, sampling.count, convention);
  const double fine = dx_norm_at(f, m, n, sampling, 2 * sampling.count, convention);
  QuadratureEstimate est{fine, std::abs(fine - coarse)};
  if (est.residual > tolerance) throw ResidualError("classical_sobolev_norm_dx", est.residual, tolerance);
  return est;
}

}  // namespace fockgauss
