#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "abc/errors.hpp"
#include "abc/specfun.hpp"

namespace abc::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void check(double order, double x) {
  if (!std::isfinite(order) || !std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
  if (order < 0.0) throw DomainError("bessel_j: negative order");
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
}

void store(double* out, double v) {
  if (out) *out = v;
}

}  // namespace

double bessel_j_series(double order, double x, double* est) {
  check(order, x);
  if (x == 0.0) {
    store(est, 0.0);
    return order == 0.0 ? 1.0 : 0.0;
  }
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  double mag = 1.0;
  int k = 1;
  for (; k < 10000; ++k) {
    term *= q / (k * (order + k));
    sum += term;
    mag += std::abs(term);
    if (std::abs(term) < 0.5 * kEps * std::abs(sum) && k > 0.5 * x) break;
  }
  const double log_pref = order * std::log(0.5 * x) - std::lgamma(order + 1.0);
  const double pref = std::exp(log_pref);
  store(est, sum != 0.0 ? (2.0 * kEps * mag * (1.0 + std::sqrt(double(k))) + kEps * std::abs(log_pref)) /
                              std::abs(sum)
                        : kInf);
  return pref * sum;
}

double bessel_j_hankel(double order, double x, double* est) {
  check(order, x);
  if (x == 0.0) {
    store(est, kInf);
    return 0.0;
  }
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double smallest = kInf;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) > std::abs(term) && k > 1) break;
    term = next;
    // even k feed P with sign (-1)^{k/2}, odd k feed Q with sign (-1)^{(k-1)/2}
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    smallest = std::abs(term);
    if (smallest < 0.1 * kEps) break;
  }
  const double chi = x - (0.5 * order + 0.25) * kPi;
  const double envelope = std::hypot(p, q);
  store(est, (smallest + 4.0 * kEps) / envelope);
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Ratio J_{nu+1}/J_nu from CF1, downward recurrence to |mu| < 1,
// Steed's CF2 for the normalisation (valid for x >= 2).
double bessel_j_steed(double order, double x) {
  check(order, x);
  if (x < 2.0) throw DomainError("bessel_j_steed: requires x >= 2");
  constexpr double fpmin = 1e-280;
  constexpr int maxit = 1000000;
  const int nl = std::max(0, static_cast<int>(order - x + 1.5));
  const double xmu = order - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  int isign = 1;
  double h = std::max(order * xi, fpmin);
  double b = xi2 * order;
  double d = 0.0;
  double c = h;
  int i = 0;
  for (; i < maxit; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b - 1.0 / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (i == maxit) throw NoConvergence("bessel_j: CF1 did not converge");

  double rjl = isign * fpmin;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  double fact = order * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const double t = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * t - rjl;
    rjl = t;
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double a = 0.25 - xmu2;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fct = a * xi / (p * p + q * q);
  double cr = br + q * fct;
  double ci = bi + p * fct;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double t = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = t;
  for (i = 1; i < maxit; ++i) {
    a += 2.0 * i;
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < fpmin) dr = fpmin;
    fct = a / (cr * cr + ci * ci);
    cr = br + cr * fct;
    ci = bi - ci * fct;
    if (std::abs(cr) + std::abs(ci) < fpmin) cr = fpmin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    t = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = t;
    if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
  }
  if (i == maxit) throw NoConvergence("bessel_j: CF2 did not converge");

  const double gam = (p - f) / q;
  const double rjmu = std::copysign(std::sqrt(w / ((p - f) * gam + q)), rjl);
  return rjl1 * (rjmu / rjl);
}

double bessel_j(double order, double x) {
  check(order, x);
  if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
  double est = kInf;
  if (x < 2.0 || 0.25 * x * x < 10.0 * (order + 1.0)) {
    const double v = bessel_j_series(order, x, &est);
    if (x < 2.0 || est <= tol::kBesselAccept) return v;
  }
  if (x > 25.0) {
    const double v = bessel_j_hankel(order, x, &est);
    if (est <= tol::kSeriesTail) return v;
  }
  return bessel_j_steed(order, x);
}

}  // namespace abc::specfun
