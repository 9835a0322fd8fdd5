#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "abc/errors.hpp"
#include "abc/specfun.hpp"

namespace abc::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kContinuationStart = 4.0;
constexpr std::size_t kTaylorCap = 600;

std::optional<int> nonpositive_integer(Complex a) {
  if (std::abs(a.imag()) >= tol::kTerminatingWindow) return std::nullopt;
  const double r = std::round(a.real());
  if (r > 0.0 || std::abs(a.real() - r) >= tol::kTerminatingWindow) return std::nullopt;
  return static_cast<int>(-r);
}

double relative(double abs_err, Complex value) {
  const double m = std::abs(value);
  return m > 0.0 ? abs_err / m : kInf;
}

SeriesReport polynomial(int n, double c, Complex z) {
  const std::vector<double> q = kummer_polynomial(n, c);
  Complex sum = 0.0;
  double mag = 0.0;
  Complex power = 1.0;
  for (double coeff : q) {
    sum += coeff * power;
    mag += std::abs(coeff * power);
    power *= z;
  }
  SeriesReport r;
  r.value = sum;
  r.terms_used = q.size();
  r.est_rel_error = relative(2.0 * kEps * mag * static_cast<double>(q.size()), sum);
  r.method = KummerMethod::Polynomial;
  return r;
}

SeriesReport maclaurin(Complex a, double c, Complex z, const KummerOptions& o) {
  const double az = std::abs(z);
  const double aa = std::abs(a);
  Complex term = 1.0;
  Complex sum = 1.0;
  double mag = 1.0;
  SeriesReport r;
  r.method = KummerMethod::Series;
  for (std::size_t k = 0; k < o.max_terms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * z / ((c + kk) * (kk + 1.0));
    sum += term;
    mag += std::abs(term);
    r.terms_used = k + 2;
    if (term == 0.0) {
      r.value = sum;
      r.est_rel_error = relative(4.0 * kEps * mag, sum);
      return r;
    }
    // sup of every later term ratio; valid because c > 0
    const double bound = az * (aa + kk + 1.0) / ((kk + 1.0) * (kk + 2.0));
    if (bound < 0.5) {
      const double tail = std::abs(term) * bound / (1.0 - bound);
      if (tail <= o.tail_tolerance * std::abs(sum)) {
        r.value = sum;
        r.est_rel_error = relative(tail + 4.0 * kEps * mag, sum);
        return r;
      }
    }
  }
  r.value = sum;
  r.est_rel_error = kInf;
  return r;
}

struct AsymptoticSum {
  Complex value;
  double error;
  std::size_t terms;
};

// sum_s (p)_s (q)_s / s! * w^{-s}, truncated at its smallest term
AsymptoticSum asymptotic_sum(Complex p, Complex q, Complex w, const KummerOptions& o) {
  Complex term = 1.0;
  Complex sum = 1.0;
  double last = 1.0;
  for (std::size_t s = 0; s < o.max_terms; ++s) {
    const double ss = static_cast<double>(s);
    const Complex next = term * (p + ss) * (q + ss) / ((ss + 1.0) * w);
    const double mag = std::abs(next);
    if (mag == 0.0) return {sum, 0.0, s + 1};
    if (mag > last) return {sum, last, s + 1};
    sum += next;
    term = next;
    last = mag;
    if (mag <= o.tail_tolerance * std::abs(sum)) return {sum, mag, s + 2};
  }
  return {sum, kInf, o.max_terms};
}

SeriesReport asymptotic_core(Complex a, double c, Complex z, const KummerOptions& o) {
  const Complex i(0.0, 1.0);
  const Complex logz = std::log(z);
  const double sign = logz.imag() >= 0.0 ? 1.0 : -1.0;  // follows the branch of log z at signed zeros
  const Complex lgc = ln_gamma(Complex(c, 0.0));

  Complex total = 0.0;
  double err = 0.0;
  double mag = 0.0;
  std::size_t terms = 0;

  if (!nonpositive_integer(c - a)) {
    const Complex log_pref = lgc + sign * i * std::numbers::pi * a - a * logz - ln_gamma(c - a);
    const Complex pref = std::exp(log_pref);
    const AsymptoticSum s = asymptotic_sum(a, a - c + 1.0, -z, o);
    const Complex t = pref * s.value;
    total += t;
    err += std::abs(pref) * s.error + std::abs(t) * kEps * (std::abs(log_pref) + 1.0);
    mag += std::abs(t);
    terms += s.terms;
  }
  if (!nonpositive_integer(a)) {
    const Complex log_pref = lgc + z + (a - c) * logz - ln_gamma(a);
    const Complex pref = std::exp(log_pref);
    const AsymptoticSum s = asymptotic_sum(c - a, 1.0 - a, z, o);
    const Complex t = pref * s.value;
    total += t;
    err += std::abs(pref) * s.error + std::abs(t) * kEps * (std::abs(log_pref) + 1.0);
    mag += std::abs(t);
    terms += s.terms;
  }
  SeriesReport r;
  r.value = total;
  r.terms_used = terms;
  r.est_rel_error = relative(err + 4.0 * kEps * mag, total);
  r.method = KummerMethod::Asymptotic;
  return r;
}

SeriesReport transformed(SeriesReport inner, Complex z, KummerMethod method) {
  inner.value *= std::exp(z);
  inner.est_rel_error += kEps * (std::abs(z) + 1.0);
  inner.method = method;
  return inner;
}

void finalize(SeriesReport& r, const KummerOptions& o) {
  const bool finite = std::isfinite(r.value.real()) && std::isfinite(r.value.imag());
  r.converged = finite && r.est_rel_error <= o.accept_tolerance;
}

void check_args(Complex a, double c, Complex z) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("kummer_1f1: c must be finite and positive");
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(z.real()) ||
      !std::isfinite(z.imag()))
    throw DomainError("kummer_1f1: non-finite argument");
}

}  // namespace

const char* kummer_method_name(KummerMethod m) noexcept {
  switch (m) {
    case KummerMethod::Polynomial: return "polynomial";
    case KummerMethod::Series: return "series";
    case KummerMethod::TransformedSeries: return "transformed_series";
    case KummerMethod::Asymptotic: return "asymptotic";
    case KummerMethod::Continuation: return "continuation";
  }
  return "unknown";
}

std::vector<double> kummer_polynomial(int n, double c) {
  if (n < 0) throw DomainError("kummer_polynomial: degree must be nonnegative");
  if (!(c > 0.0)) throw DomainError("kummer_polynomial: c must be positive");
  std::vector<double> q(static_cast<std::size_t>(n) + 1);
  q[0] = 1.0;
  for (int k = 0; k < n; ++k) q[k + 1] = q[k] * (k - n) / ((c + k) * (k + 1.0));
  return q;
}

SeriesReport kummer_series(Complex a, double c, Complex z, const KummerOptions& o) {
  check_args(a, c, z);
  SeriesReport r;
  if (auto n = nonpositive_integer(a)) {
    r = polynomial(*n, c, z);
  } else if (z.real() >= 0.0) {
    r = maclaurin(a, c, z, o);
  } else {
    r = transformed(maclaurin(c - a, c, -z, o), z, KummerMethod::TransformedSeries);
  }
  finalize(r, o);
  return r;
}

SeriesReport kummer_asymptotic(Complex a, double c, Complex z, const KummerOptions& o) {
  check_args(a, c, z);
  if (z == 0.0) {
    SeriesReport r;
    r.value = 1.0;
    r.est_rel_error = kInf;
    r.method = KummerMethod::Asymptotic;
    return r;
  }
  SeriesReport r = z.real() > 0.0
                       ? transformed(asymptotic_core(c - a, c, -z, o), z, KummerMethod::Asymptotic)
                       : asymptotic_core(a, c, z, o);
  finalize(r, o);
  return r;
}

// Taylor steps along the ray from |w| = kContinuationStart using the ODE
// z M'' + (c - z) M' - a M = 0; step size half the distance to the origin.
SeriesReport kummer_continuation(Complex a, double c, Complex z, const KummerOptions& o) {
  check_args(a, c, z);
  const double radius = std::abs(z);
  if (radius <= kContinuationStart) {
    SeriesReport r = kummer_series(a, c, z, o);
    r.method = KummerMethod::Continuation;
    return r;
  }
  const Complex dir = z / radius;
  Complex w = dir * kContinuationStart;
  const SeriesReport m0 = kummer_series(a, c, w, o);
  const SeriesReport m1 = kummer_series(a + 1.0, c + 1.0, w, o);
  Complex f = m0.value;
  Complex df = (a / c) * m1.value;
  double est = m0.est_rel_error + m1.est_rel_error;
  std::size_t terms = m0.terms_used + m1.terms_used;

  double pos = kContinuationStart;
  while (pos < radius) {
    const double step = std::min(radius - pos, 0.5 * pos);
    const Complex h = dir * step;
    Complex u0 = f;
    Complex u1 = df * h;
    Complex sum = u0 + u1;
    Complex dsum = u1;
    double mag = std::abs(u0) + std::abs(u1);
    int quiet = 0;
    std::size_t k = 0;
    for (; k < kTaylorCap; ++k) {
      const double kk = static_cast<double>(k);
      const Complex u2 = ((kk + a) * h * h * u0 - (kk + 1.0) * (kk + c - w) * h * u1) /
                         (w * (kk + 2.0) * (kk + 1.0));
      sum += u2;
      dsum += (kk + 2.0) * u2;
      mag += std::abs(u2);
      const bool small = std::abs(u2) <= 0.1 * kEps * std::abs(sum) &&
                         (kk + 2.0) * std::abs(u2) <= 0.1 * kEps * std::abs(dsum);
      quiet = small ? quiet + 1 : 0;
      u0 = u1;
      u1 = u2;
      if (quiet >= 2) break;
    }
    terms += k;
    if (k == kTaylorCap) est = kInf;
    f = sum;
    df = dsum / h;
    est += relative(4.0 * kEps * mag, f);
    pos += step;
    w += h;
  }
  SeriesReport r;
  r.value = f;
  r.terms_used = terms;
  r.est_rel_error = est;
  r.method = KummerMethod::Continuation;
  finalize(r, o);
  return r;
}

SeriesReport kummer_1f1(Complex a, double c, Complex z, const KummerOptions& o) {
  check_args(a, c, z);
  SeriesReport best;
  best.est_rel_error = kInf;
  auto attempt = [&](SeriesReport r) {
    if (r.converged) return true;
    if (!(r.est_rel_error >= best.est_rel_error)) best = r;
    return false;
  };

  if (auto n = nonpositive_integer(a)) {
    SeriesReport r = polynomial(*n, c, z);
    finalize(r, o);
    if (attempt(r)) return r;
  }
  const bool large = std::abs(z) > tol::kKummerAsymptoticRadius;
  if (large) {
    SeriesReport r = kummer_asymptotic(a, c, z, o);
    if (attempt(r)) return r;
  }
  {
    SeriesReport r = kummer_series(a, c, z, o);
    if (attempt(r)) return r;
  }
  if (!nonpositive_integer(a)) {
    SeriesReport r = z.real() >= 0.0
                         ? transformed(maclaurin(c - a, c, -z, o), z, KummerMethod::TransformedSeries)
                         : maclaurin(a, c, z, o);
    finalize(r, o);
    if (attempt(r)) return r;
  }
  {
    SeriesReport r = kummer_continuation(a, c, z, o);
    if (attempt(r)) return r;
  }
  if (!large) {
    SeriesReport r = kummer_asymptotic(a, c, z, o);
    if (attempt(r)) return r;
  }
  throw NoConvergence("kummer_1f1: no route reached tolerance (best estimate " +
                      std::to_string(best.est_rel_error) + ")");
}

}  // namespace abc::specfun
