#include "abc/scattering.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "abc/errors.hpp"
#include "abc/radial.hpp"

namespace abc {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// sin(pi x) and cos(pi x), exact zeros at integers and half-integers
double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double v = std::abs(r) == 0.5 ? 0.0 : std::cos(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

// 1 / sqrt(2 pi p i)
Complex amplitude_prefactor(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("momentum must be positive");
  return std::polar(1.0 / std::sqrt(2.0 * kPi * p), -0.25 * kPi);
}

double half_angle_sine(double phi) {
  if (!std::isfinite(phi)) throw DomainError("angle must be finite");
  const double s = std::sin(0.5 * phi);
  if (std::abs(s) < tol::kForwardSingularity)
    throw ForwardSingularity("amplitude is singular in the forward direction");
  return s;
}

struct Resummed {
  Complex value;
  double dispersion;
};

// i e^{2 i delta_l} of the pure flux problem. Channels at or above l0 = -s
// carry xi = 0, the rest xi = pi/2; this also covers kappa = 0 at half-integer
// flux, which the channel regime rule tags supercritical.
Complex ab_reduced_element(int l, double flux) {
  const FluxDecomposition fd = decompose_flux(flux);
  const double gamma = 0.5 + std::abs(l + flux + 0.5);
  const double xi = l >= -fd.s ? 0.0 : 0.5 * kPi;
  const double delta = -0.5 * kPi * gamma + 0.25 * kPi + 0.5 * kPi * l + xi;
  return kI * std::polar(1.0, 2.0 * delta);
}

// Free-wave-normalised elements i e^{2 i delta_l} for l = lo..hi.
std::vector<Complex> reduced_elements(const Coupling& c, double energy, int lo, int hi) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int l = lo; l <= hi; ++l)
    out.push_back(c.a() == 0.0 ? ab_reduced_element(l, c.flux())
                               : kI * std::exp(2.0 * kI * phase_shift(c, energy, l).delta_total));
  return out;
}

// sum_l S_l e^{i l phi} for l in [-l_max, l_max], with S given on [-l_max - 2, l_max].
// The series is differenced twice, which divides the sum by (1 - e^{i phi})^2,
// then Abel-weighted by t^{|l - center|} and extrapolated to t = 1.
Resummed resum(std::vector<Complex> seq, int l_max, int center, double phi, Resummation mode) {
  const int lo = -l_max - 2;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = seq.size() - 1; i >= 1; --i) seq[i] -= seq[i - 1];
  auto weighted = [&](double t) {
    Complex sum = 0.0;
    for (int l = -l_max; l <= l_max; ++l)
      sum += seq[static_cast<std::size_t>(l - lo)] * std::pow(t, std::abs(l - center)) * std::polar(1.0, l * phi);
    return sum;
  };
  const Complex one_minus_u = 1.0 - std::polar(1.0, phi);
  const Complex denom = one_minus_u * one_minus_u;
  if (mode == Resummation::None) return {weighted(1.0) / denom, 0.0};

  constexpr std::array<double, 3> h = {0.05, 0.03, 0.01};
  const std::array<Complex, 3> v = {weighted(1.0 - h[0]), weighted(1.0 - h[1]), weighted(1.0 - h[2])};
  // Lagrange extrapolation to h = 0
  Complex quad = 0.0;
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) w *= h[j] / (h[j] - h[i]);
    quad += w * v[i];
  }
  const Complex lin = (h[1] * v[2] - h[2] * v[1]) / (h[1] - h[2]);
  const double scale = std::abs(quad);
  return {quad / denom, scale > 0.0 ? std::abs(quad - lin) / scale : 0.0};
}

}  // namespace

FluxDecomposition decompose_flux(double flux) {
  if (!std::isfinite(flux)) throw DomainError("flux must be finite");
  FluxDecomposition fd;
  const double s = std::ceil(flux - 0.5);
  fd.s = static_cast<int>(s);
  fd.delta = flux - s;
  return fd;
}

Complex ab_partial_coefficient(int l, double flux) {
  return std::polar(1.0, -0.5 * kPi * std::abs(l + flux));
}

Complex ab_amplitude(double phi, double flux, double p) {
  const double sh = half_angle_sine(phi);
  const FluxDecomposition fd = decompose_flux(flux);
  return amplitude_prefactor(p) * std::polar(1.0, -phi * (fd.s + 0.5)) * (sin_pi(flux) / sh);
}

PhaseShiftRecord phase_shift(const Coupling& c, double energy, int l) {
  const ContinuumParams cp = continuum_params(c, energy, l);
  const Channel ch = make_channel(c, l);
  const double gamma = *ch.gamma_exp;
  const Complex z(gamma + 0.5, cp.mu);
  const Complex lg = specfun::ln_gamma(z);
  PhaseShiftRecord rec;
  rec.l = l;
  rec.delta_ab = -0.5 * kPi * gamma + 0.25 * kPi + 0.5 * kPi * l;
  rec.delta_a = cp.xi - lg.imag();
  rec.delta_total = rec.delta_ab + rec.delta_a;
  const Complex rational = Complex(ch.kappa, -cp.mu_prime) / Complex(gamma - 0.5, cp.mu);
  const Complex ratio = std::exp(specfun::ln_gamma(std::conj(z)) - lg);
  rec.s_matrix = rational * ratio * std::polar(1.0, kPi * (l - gamma + 0.5));
  return rec;
}

std::vector<PhaseShiftRecord> phase_shifts(const Coupling& c, double energy, int l_max) {
  if (l_max < 0) throw ConfigError("l_max must be nonnegative");
  std::vector<PhaseShiftRecord> out;
  out.reserve(2 * static_cast<std::size_t>(l_max) + 1);
  for (int l = -l_max; l <= l_max; ++l) out.push_back(phase_shift(c, energy, l));
  return out;
}

ContinuedSMatrix s_matrix_continued(const Coupling& c, double energy, int l) {
  const double m = c.mass();
  if (!(energy > 0.0 && energy < m)) throw DomainError("continued S-matrix requires 0 < E < m");
  const Channel ch = make_channel(c, l);
  if (ch.regime != Regime::Subcritical)
    throw SupercriticalError("channel l = " + std::to_string(l) + " is supercritical");
  const double gamma = *ch.gamma_exp;
  const double lam = std::sqrt((m - energy) * (m + energy));
  const double x = c.a() * energy / lam;
  const double num = ch.kappa + m * c.a() / lam;
  const double den = gamma - 0.5 - x;

  ContinuedSMatrix out;
  const double z = gamma + 0.5 - x;
  const double n = std::round(1.0 - z);
  if (n >= 1.0 && std::abs(z - (1.0 - n)) < tol::kPoleProximity) {
    out.near_pole = true;
    out.pole_n = static_cast<int>(n);
    return out;
  }
  Complex rational;
  if (std::abs(den) < tol::kPoleProximity) {
    if (ch.kappa > 0.0) {
      out.near_pole = true;
      out.pole_n = 0;
      return out;
    }
    rational = -energy / m;  // removable: numerator vanishes with the denominator
  } else {
    rational = num / den;
  }
  const Complex ratio = std::exp(specfun::ln_gamma(Complex(z, 0.0)) - specfun::ln_gamma(Complex(gamma + 0.5 + x, 0.0)));
  out.value = rational * ratio * std::polar(1.0, kPi * (l - gamma + 0.5));
  return out;
}

std::vector<double> find_poles(const Coupling& c, int l, int n_max) {
  std::vector<double> poles;
  if (c.a() == 0.0) return poles;
  const Channel ch = make_channel(c, l);
  const int first = admissible_n(ch).first;
  const double m = c.mass();
  const double a = c.a();
  for (int n = first; n <= n_max; ++n) {
    const double target = *ch.gamma_exp - 0.5 + n;
    double lo = 0.0;
    double hi = m;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double x = a * mid / std::sqrt((m - mid) * (m + mid));
      (x < target ? lo : hi) = mid;
    }
    poles.push_back(0.5 * (lo + hi));
  }
  return poles;
}

Complex coulomb_amplitude(double phi, const Coupling& c, double p) {
  const double sh = half_angle_sine(phi);
  const double eta = c.a() * c.mass() / p;
  return amplitude_prefactor(p) * Complex(cos_pi(c.flux()), sin_pi(c.flux())) * (eta / sh);
}

AngularSample total_amplitude(double phi, const Coupling& c, double p) {
  AngularSample s;
  s.phi = phi;
  s.f_ab = ab_amplitude(phi, c.flux(), p);
  s.f_a = coulomb_amplitude(phi, c, p);
  s.f_tot = s.f_ab + s.f_a;
  s.dsigma = std::norm(s.f_tot);
  const double sh = std::sin(0.5 * phi);
  const double eta = c.a() * c.mass() / p;
  const int sd = decompose_flux(c.flux()).s;
  s.interference = 2.0 * eta * sin_pi(c.flux()) * std::cos(sd * phi + 0.5 * phi + kPi * c.flux()) /
                   (2.0 * kPi * p * sh * sh);
  return s;
}

double cross_section_bracket(double phi, const Coupling& c, double p) {
  const double sh = half_angle_sine(phi);
  if (!(p > 0.0)) throw DomainError("momentum must be positive");
  const double eta = c.a() * c.mass() / p;
  const double sf = sin_pi(c.flux());
  const int sd = decompose_flux(c.flux()).s;
  const double bracket =
      sf * sf + 2.0 * eta * sf * std::cos(sd * phi + 0.5 * phi + kPi * c.flux()) + eta * eta;
  return bracket / (2.0 * kPi * p * sh * sh);
}

PartialWaveReport partial_wave_report(double phi, const Coupling& c, double p, int l_max,
                                      Resummation resummation, double phi_min) {
  if (!std::isfinite(phi) || std::abs(phi) > kPi) throw DomainError("angle must lie in [-pi, pi]");
  if (std::abs(phi) <= phi_min) throw ForwardSingularity("angle inside the excluded forward cone");
  if (l_max < 0) throw ConfigError("l_max must be nonnegative");
  const Complex pref = amplitude_prefactor(p);
  const double flux = c.flux();

  const double energy = std::hypot(p, c.mass());
  const int center = -decompose_flux(flux).s;
  const int lo = -l_max - 2;

  PartialWaveReport rep;
  // AB bracket: after differencing only the flux jump at l0 survives, so the
  // weighted sum centred there is exact
  const std::vector<Complex> ab_seq = reduced_elements(c.with_a(0.0), energy, lo, l_max);
  rep.ab_part = resum(ab_seq, l_max, center, phi, Resummation::None).value;
  if (c.a() > 0.0) {
    std::vector<Complex> coulomb_seq = reduced_elements(c, energy, lo, l_max);
    for (std::size_t i = 0; i < coulomb_seq.size(); ++i) coulomb_seq[i] -= ab_seq[i];
    const Resummed cs = resum(std::move(coulomb_seq), l_max, 0, phi, resummation);
    rep.dispersion = cs.dispersion;
    if (rep.dispersion > tol::kAbelDispersion) {
      char msg[80];
      std::snprintf(msg, sizeof msg, "Abel extrapolation disperses by %.3g", rep.dispersion);
      throw NoConvergence(msg);
    }
    rep.coulomb_part = cs.value;
  }
  rep.ab_part *= pref;
  rep.coulomb_part *= pref;
  rep.value = rep.ab_part + rep.coulomb_part;
  return rep;
}

Complex partial_wave_sum(double phi, const Coupling& c, double p, int l_max, Resummation resummation,
                         double phi_min) {
  return partial_wave_report(phi, c, p, l_max, resummation, phi_min).value;
}

}  // namespace abc
