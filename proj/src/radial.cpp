#include "abc/radial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "abc/errors.hpp"
#include "abc/specfun.hpp"
#include "quadrature.hpp"

namespace abc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutoffRho = 40.0;

double horner(const std::vector<double>& q, double x) {
  double s = 0.0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) s = s * x + *it;
  return s;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
  out.back() = hi;
  return out;
}

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("radial grid is empty");
  if (!(grid.front() > 0.0)) throw DomainError("radial grid must lie in r > 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("radial grid must be strictly ascending");
  if (!std::isfinite(grid.back())) throw DomainError("radial grid must be finite");
}

std::vector<double> square_sum(const std::vector<double>& u, double wu, const std::vector<double>& v,
                               double wv) {
  std::vector<double> out(u.size() + v.size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) out[i + j] += wu * u[i] * u[j];
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += wv * v[i] * v[j];
  while (out.size() > 1 && out.back() == 0.0) out.pop_back();
  return out;
}

struct Estimate {
  double value;
  double error;
};

Estimate profile_norm(const BoundProfile& pr) {
  const double s = 2.0 * pr.gamma_exp - 1.0;  // power of rho in the density, plus one
  const std::vector<double> w =
      square_sum(pr.upper, pr.upper_weight * pr.upper_weight, pr.lower, pr.lower_weight * pr.lower_weight);
  const double q = std::max(1.0, 2.0 / s);
  auto integrand = [&](double u) {
    const double rho = kCutoffRho * std::pow(u, q);
    return q * std::pow(kCutoffRho, s) * std::pow(u, q * s - 1.0) * std::exp(-rho) * horner(w, rho);
  };
  const detail::QuadratureResult head = detail::integrate(integrand, 0.0, 1.0, tol::kQuadratureRel);
  double tail = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j)
    tail += w[j] * specfun::upper_incomplete_gamma(s + static_cast<double>(j), kCutoffRho);
  const double factor = pr.scale * pr.scale / pr.two_lambda;
  return {(head.value + tail) * factor, (head.error + 1e-14 * std::abs(tail)) * factor};
}

double romberg_level(const std::vector<double>& x, const std::vector<double>& y, std::size_t stride) {
  double sum = 0.0;
  std::size_t i = 0;
  while (i + stride < x.size()) {
    sum += 0.5 * (x[i + stride] - x[i]) * (y[i] + y[i + stride]);
    i += stride;
  }
  if (i + 1 < x.size()) {
    const std::size_t last = x.size() - 1;
    sum += 0.5 * (x[last] - x[i]) * (y[i] + y[last]);
  }
  return sum;
}

Estimate sampled_norm(const RadialSolution& sol) {
  const std::size_t n = sol.grid.size();
  if (n < 9) throw QuadratureFailure("normalization needs at least 9 samples");
  // trapezoid in t = ln r, where log-spaced samples are uniform
  std::vector<double> y(n);
  std::vector<double> t(n);
  std::vector<double> yr(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = sol.f[i] * sol.f[i] + sol.g[i] * sol.g[i];
    t[i] = std::log(sol.grid[i]);
    yr[i] = y[i] * sol.grid[i];
  }
  const auto& x = sol.grid;

  const double t1 = romberg_level(t, yr, 1);
  const double t2 = romberg_level(t, yr, 2);
  const double t4 = romberg_level(t, yr, 4);
  const double s1 = t1 + (t1 - t2) / 3.0;
  const double s2 = t2 + (t2 - t4) / 3.0;
  double error = std::abs(s1 - s2) / 15.0 + 1e-15 * std::abs(s1);

  // head: ln y = ln A + p ln x + beta x through the first three samples;
  // tail: exponential decay fitted to the last pair, checked against the pair before
  auto slope = [&](std::size_t i, std::size_t j) { return std::log(y[j] / y[i]) / std::log(x[j] / x[i]); };
  auto rate = [&](std::size_t i, std::size_t j) { return std::log(y[i] / y[j]) / (x[j] - x[i]); };
  double head = 0.0;
  if (y[0] > 0.0 && y[1] > 0.0 && y[2] > 0.0) {
    const double d01 = (x[1] - x[0]) / std::log(x[1] / x[0]);
    const double d12 = (x[2] - x[1]) / std::log(x[2] / x[1]);
    const double beta = (slope(1, 2) - slope(0, 1)) / (d12 - d01);
    const double power = slope(0, 1) - beta * d01;
    if (!(power > -1.0)) throw QuadratureFailure("density is not integrable at the origin");
    const double bx = beta * x[0];
    head = y[0] * std::exp(-bx) * x[0] * (1.0 / (power + 1.0) + bx / (power + 2.0) + 0.5 * bx * bx / (power + 3.0));
    error += std::abs(head) * (std::abs(bx * bx * bx) + 1e-6);
  }
  double tail = 0.0;
  if (y[n - 1] > 0.0 && y[n - 2] > 0.0 && y[n - 3] > 0.0) {
    const double k = rate(n - 2, n - 1);
    if (!(k > 0.0)) throw QuadratureFailure("density does not decay at the end of the grid");
    tail = y[n - 1] / k;
    error += tail * std::abs(rate(n - 3, n - 2) - k) / k * (1.0 + k * x[n - 1]) + 1e-6 * tail;
  }
  return {s1 + head + tail, error};
}

double upper_minus_mass(double energy, double mass, double lambda) {
  // m - E = lambda^2 / (m + E)
  return lambda * lambda / (mass + energy);
}

}  // namespace

std::pair<double, double> BoundProfile::evaluate(double r) const {
  const double rho = two_lambda * r;
  const double base = scale * std::exp((gamma_exp - 1.0) * std::log(rho) - 0.5 * rho);
  return {base * upper_weight * horner(upper, rho), base * lower_weight * horner(lower, rho)};
}

std::vector<double> default_bound_grid(const BoundState& st) {
  const double two_lambda = 2.0 * st.lambda;
  return log_grid(tol::kBoundGridRhoMin / two_lambda, tol::kBoundGridRhoMax / two_lambda,
                  tol::kBoundGridPoints);
}

std::vector<double> default_continuum_grid(double p) {
  if (!(p > 0.0)) throw DomainError("continuum grid needs p > 0");
  return log_grid(tol::kContinuumGridMin / p, tol::kContinuumGridMax / p, tol::kContinuumGridPoints);
}

RadialSolution bound_radial(const Coupling& c, const BoundState& st, std::span<const double> grid) {
  check_grid(grid);
  const double m = c.mass();
  if (!(st.energy > 0.0 && st.energy < m) || !(st.lambda > 0.0) || !(st.gamma_exp > 0.0))
    throw DomainError("bound_radial: not a bound state");
  const Channel ch = make_channel(c, st.l);
  if (!admissible_n(ch).contains(st.n)) throw InadmissibleQuantumNumber("bound_radial: n not admissible");

  const double two_gamma = 2.0 * st.gamma_exp;
  const std::vector<double> q1 = specfun::kummer_polynomial(st.n, two_gamma);
  std::vector<double> upper = q1;
  std::vector<double> lower = q1;
  if (st.n > 0) {
    const double ratio = -st.n / (ch.kappa + m * c.a() / st.lambda);
    const std::vector<double> q2 = specfun::kummer_polynomial(st.n - 1, two_gamma);
    for (std::size_t k = 0; k < q2.size(); ++k) {
      upper[k] += ratio * q2[k];
      lower[k] -= ratio * q2[k];
    }
  }

  BoundProfile pr;
  pr.two_lambda = 2.0 * st.lambda;
  pr.gamma_exp = st.gamma_exp;
  pr.upper_weight = std::sqrt(m + st.energy);
  pr.lower_weight = std::sqrt(upper_minus_mass(st.energy, m, st.lambda));
  pr.upper = std::move(upper);
  pr.lower = std::move(lower);

  // f > 0 as r -> 0
  double lead = 0.0;
  for (double v : pr.upper)
    if (v != 0.0) {
      lead = v;
      break;
    }
  pr.scale = lead < 0.0 ? -1.0 : 1.0;
  const Estimate n = profile_norm(pr);
  if (!(n.value > 0.0) || !std::isfinite(n.value)) throw QuadratureFailure("bound_radial: zero norm");
  pr.scale /= std::sqrt(n.value);

  RadialSolution sol;
  sol.kind = SolutionKind::Bound;
  sol.l = st.l;
  sol.energy = st.energy;
  sol.grid.assign(grid.begin(), grid.end());
  sol.f.resize(grid.size());
  sol.g.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) std::tie(sol.f[i], sol.g[i]) = pr.evaluate(grid[i]);
  sol.profile = std::move(pr);
  return sol;
}

double norm_integral(const RadialSolution& sol, double tolerance) {
  Estimate est{};
  if (sol.profile) {
    est = profile_norm(*sol.profile);
  } else {
    if (sol.f.size() != sol.grid.size() || sol.g.size() != sol.grid.size())
      throw DomainError("norm_integral: sample arrays do not match the grid");
    est = sampled_norm(sol);
  }
  if (!std::isfinite(est.value) || !(est.value > 0.0)) throw QuadratureFailure("norm_integral: zero norm");
  if (est.error > tolerance * est.value)
  {
    char msg[96];
    std::snprintf(msg, sizeof msg, "norm_integral: error estimate %.3g exceeds tolerance %.3g", est.error / est.value,
                  tolerance);
    throw QuadratureFailure(msg);
  }
  return est.value;
}

RadialSolution normalize(const RadialSolution& sol) {
  if (sol.kind != SolutionKind::Bound) throw DomainError("normalize: only bound solutions are normalizable");
  const double factor = 1.0 / std::sqrt(norm_integral(sol));
  RadialSolution out = sol;
  for (double& v : out.f) v *= factor;
  for (double& v : out.g) v *= factor;
  if (out.profile) out.profile->scale *= factor;
  return out;
}

ContinuumParams continuum_params(const Coupling& c, double energy, int l) {
  const double m = c.mass();
  if (!(energy > m) || !std::isfinite(energy)) throw DomainError("continuum requires E > m");
  const Channel ch = make_channel(c, l);
  if (ch.regime != Regime::Subcritical)
    throw SupercriticalError("channel l = " + std::to_string(l) + " is supercritical");
  const double gamma = *ch.gamma_exp;
  ContinuumParams cp;
  cp.p = std::sqrt((energy - m) * (energy + m));
  cp.mu = c.a() * energy / cp.p;
  cp.mu_prime = c.a() * m / cp.p;
  const Complex ratio = Complex(gamma - 0.5, cp.mu) / Complex(ch.kappa, -cp.mu_prime);
  cp.xi = -0.5 * std::arg(ratio);
  if (cp.xi <= -0.5 * kPi) cp.xi += kPi;
  cp.asymptotic_phase = -cp.xi - 0.5 * kPi * gamma - specfun::arg_gamma(Complex(gamma + 0.5, cp.mu)) +
                        0.75 * kPi + 0.5 * kPi * l;
  return cp;
}

std::pair<RadialSolution, ContinuumParams> continuum_radial(const Coupling& c, double energy, int l,
                                                            std::span<const double> grid) {
  check_grid(grid);
  const ContinuumParams cp = continuum_params(c, energy, l);
  const double gamma = *make_channel(c, l).gamma_exp;
  const double m = c.mass();
  const double p = cp.p;
  const double lg = specfun::ln_gamma(Complex(gamma + 0.5, cp.mu)).real() -
                    specfun::ln_gamma(Complex(2.0 * gamma, 0.0)).real() + 0.5 * kPi * cp.mu;
  const double upper = std::sqrt((energy + m) / (energy * p));
  const double lower = std::sqrt(p / (energy * (energy + m)));  // sqrt((E-m)/(E p))
  const Complex a1(gamma - 0.5, -cp.mu);

  RadialSolution sol;
  sol.kind = SolutionKind::Continuum;
  sol.l = l;
  sol.energy = energy;
  sol.grid.assign(grid.begin(), grid.end());
  sol.f.resize(grid.size());
  sol.g.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = p * grid[i];
    const Complex w = std::polar(1.0, x - cp.xi) *
                      specfun::kummer_1f1(a1, 2.0 * gamma, Complex(0.0, -2.0 * x)).value;
    const double envelope = 2.0 * p * std::exp((gamma - 1.0) * std::log(2.0 * x) + lg);
    sol.f[i] = upper * envelope * w.real();
    sol.g[i] = lower * envelope * w.imag();
  }
  return {std::move(sol), cp};
}

TailCoefficient bound_tail_coefficient(const Coupling& c, const BoundState& st) {
  const double m = c.mass();
  const double a = c.a();
  if (!(st.energy > 0.0 && st.energy < m) || !(st.lambda > 0.0))
    throw DomainError("bound_tail_coefficient: not a bound state");
  const Channel ch = make_channel(c, st.l);
  const double lam = st.lambda;
  const double m_minus_e = upper_minus_mass(st.energy, m, lam);
  const double log_bracket = 0.5 * std::log((m + st.energy) / m_minus_e) +
                             std::log(ch.kappa + m * a / lam) + 3.0 * std::log(lam) -
                             std::log(2.0 * m * m * a) - std::lgamma(st.n + 1.0) -
                             std::lgamma(2.0 * st.gamma_exp + st.n);
  TailCoefficient t;
  t.prefactor = std::exp(0.5 * log_bracket);
  t.exponent = st.gamma_exp + st.n - 0.5;
  t.f_exponent = st.gamma_exp + st.n - 1.0;
  t.tail_ratio = std::sqrt(m_minus_e / (m + st.energy));
  return t;
}

double ode_residual(const Coupling& c, const RadialSolution& sol, ResidualNorm norm) {
  const std::size_t n = sol.grid.size();
  if (n < 5) throw DomainError("ode_residual needs at least 5 grid points");
  if (sol.f.size() != n || sol.g.size() != n) throw DomainError("ode_residual: sample arrays do not match the grid");
  const double m = c.mass();
  const double e = sol.energy;
  const double a = c.a();
  const double j = sol.l + c.flux();
  double worst = 0.0;
  double worst_abs = 0.0;
  double scale = 0.0;
  double w[5];
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double r = sol.grid[i];
    detail::derivative_weights(r, &sol.grid[i - 2], 5, w);
    double df = 0.0;
    double dg = 0.0;
    for (int k = 0; k < 5; ++k) {
      df += w[k] * sol.f[i - 2 + k];
      dg += w[k] * sol.g[i - 2 + k];
    }
    const double f = sol.f[i];
    const double g = sol.g[i];
    const double t1 = j / r * f;
    const double t2 = (e + m + a / r) * g;
    const double s1 = std::abs(df) + std::abs(t1) + std::abs(t2);
    const double u1 = (1.0 + j) / r * g;
    const double u2 = (e - m + a / r) * f;
    const double s2 = std::abs(dg) + std::abs(u1) + std::abs(u2);
    const double r1 = std::abs(df - t1 + t2);
    const double r2 = std::abs(dg + u1 - u2);
    if (s1 > 0.0) worst = std::max(worst, r1 / s1);
    if (s2 > 0.0) worst = std::max(worst, r2 / s2);
    worst_abs = std::max({worst_abs, r1, r2});
    scale = std::max({scale, s1, s2});
  }
  if (norm == ResidualNorm::Pointwise) return worst;
  return scale > 0.0 ? worst_abs / scale : 0.0;
}

}  // namespace abc
