#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "abc/errors.hpp"
#include "abc/specfun.hpp"

namespace abc::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,  43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

Complex stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  Complex series = 0.0;
  for (double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series;
}

// ln sin(pi z) on the branch analytic in the closed upper half plane and
// real at z = 1/2; the lower half plane follows by conjugation.
Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const double x = z.real();
  const double y = z.imag();
  const double frac = x - std::floor(x);
  const double decay = std::exp(-2.0 * kPi * y);
  const Complex e2 = decay * Complex(std::cos(2.0 * kPi * frac), std::sin(2.0 * kPi * frac));
  return Complex(kPi * y - std::numbers::ln2, kPi * (0.5 - x)) + std::log(1.0 - e2);
}

bool near_pole(Complex z) {
  if (z.real() > 0.5 || std::abs(z.imag()) >= tol::kPoleWindow) return false;
  return std::abs(z.real() - std::round(z.real())) < tol::kPoleWindow;
}

}  // namespace

Complex ln_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("ln_gamma: non-finite argument");
  if (near_pole(z))
    throw PoleError("ln_gamma: pole at z = " + std::to_string(std::round(z.real())));
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - ln_gamma(1.0 - z);

  Complex shift = 0.0;
  Complex w = z;
  while (w.real() < 10.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

double arg_gamma(Complex z) { return ln_gamma(z).imag(); }

double upper_incomplete_gamma(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0)) throw DomainError("upper_incomplete_gamma: need s > 0, x >= 0");
  const double log_prefactor = s * std::log(x) - x;
  const double eps = 1e-16;
  if (x < s + 1.0) {
    // Γ(s) - γ(s, x)
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < 100000; ++k) {
      term *= x / (s + k);
      sum += term;
      if (std::abs(term) < eps * std::abs(sum)) break;
    }
    const double lower = x > 0.0 ? std::exp(log_prefactor) * sum : 0.0;
    return std::tgamma(s) - lower;
  }
  // Lentz continued fraction
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return std::exp(log_prefactor) * h;
}

}  // namespace abc::specfun
