#include "abc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "abc/errors.hpp"
#include "abc/radial.hpp"
#include "abc/scattering.hpp"
#include "abc/semiclassics.hpp"
#include "abc/spectrum.hpp"

namespace abc::validation {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Sweep {
  double a;
  double flux;
};

std::vector<Sweep> spectrum_sweeps() {
  std::vector<Sweep> out;
  for (double a : {0.1, 0.3, 0.45})
    for (double flux : {0.0, 0.25, 0.5}) out.push_back({a, flux});
  return out;
}

// Calls body for every subcritical, admissible (coupling, l, n) with |l| <= 3, n <= 3.
void for_each_level(const std::function<void(const Coupling&, int, int)>& body) {
  for (const Sweep& s : spectrum_sweeps()) {
    const Coupling c(s.a, s.flux);
    for (int l = -3; l <= 3; ++l) {
      const Channel ch = make_channel(c, l);
      if (ch.regime != Regime::Subcritical || ch.kappa == 0.0) continue;
      for (int n = admissible_n(ch).first; n <= 3; ++n) body(c, l, n);
    }
  }
}

Check measure(const char* suite, const char* name, double tolerance, const std::function<double()>& body) {
  Check ck{suite, name, kInf, tolerance, false};
  try {
    ck.measured = body();
  } catch (const Error&) {
    ck.measured = kInf;
  }
  ck.passed = ck.measured <= tolerance;
  return ck;
}

void pole_spectrum(Report& rep, const Tolerances& t) {
  rep.checks.push_back(measure("pole-spectrum", "poles_vs_closed_form", t.pole_spectrum, [] {
    double worst = 0.0;
    for_each_level([&](const Coupling& c, int l, int n) {
      const std::vector<double> poles = find_poles(c, l, n);
      const double e = dirac_energy(c, l, n).energy;
      worst = std::max(worst, std::abs(poles.back() - e) / c.mass());
    });
    return worst;
  }));
  rep.checks.push_back(measure("pole-spectrum", "poles_vs_semiclassical", t.pole_spectrum, [] {
    double worst = 0.0;
    for_each_level([&](const Coupling& c, int l, int n) {
      const double e = semiclassical_energy(c, quantized_actions(l, n));
      worst = std::max(worst, std::abs(find_poles(c, l, n).back() - e) / c.mass());
    });
    return worst;
  }));
}

void semiclassical(Report& rep, const Tolerances& t) {
  rep.checks.push_back(measure("semiclassical", "quantized_actions_vs_closed_form", t.semiclassical, [] {
    double worst = 0.0;
    for_each_level([&](const Coupling& c, int l, int n) {
      const double e = semiclassical_energy(c, quantized_actions(l, n));
      worst = std::max(worst, std::abs(e - dirac_energy(c, l, n).energy) / c.mass());
    });
    return worst;
  }));
}

void partial_wave(Report& rep, const Tolerances& t) {
  constexpr double p = 0.75;
  constexpr int l_max = 60;
  auto angles = [] {
    std::vector<double> phi;
    for (int i = 0; i <= 24; ++i) phi.push_back(std::min(kPi, 0.3 + (kPi - 0.3) * i / 24.0));
    return phi;
  };
  rep.checks.push_back(measure("partial-wave", "ab_reconstruction", t.partial_wave, [&] {
    double worst = 0.0;
    for (double flux : {0.25, 0.5, 0.75}) {
      const Coupling c(0.0, flux);
      for (double phi : angles())
        worst = std::max(worst, std::abs(partial_wave_sum(phi, c, p, l_max) - ab_amplitude(phi, flux, p)));
    }
    return worst;
  }));
  rep.checks.push_back(measure("partial-wave", "integer_flux_vanishes", t.partial_wave_zero, [&] {
    double worst = 0.0;
    for (double flux : {-1.0, 0.0, 1.0, 2.0}) {
      const Coupling c(0.0, flux);
      for (double phi : angles()) worst = std::max(worst, std::abs(partial_wave_sum(phi, c, p, l_max)));
    }
    return worst;
  }));
}

std::vector<std::pair<Coupling, std::pair<int, int>>> bound_cases() {
  std::vector<std::pair<Coupling, std::pair<int, int>>> out;
  for (double flux : {0.0, 0.25})
    for (int l : {0, 1, -2})
      for (int n = 0; n <= 2; ++n) {
        const Coupling c(0.3, flux);
        const Channel ch = make_channel(c, l);
        if (ch.regime == Regime::Subcritical && admissible_n(ch).contains(n)) out.push_back({c, {l, n}});
      }
  return out;
}

void ode_residual_suite(Report& rep, const Tolerances& t) {
  rep.checks.push_back(measure("ode-residual", "bound_states", t.ode_residual, [] {
    double worst = 0.0;
    for (const auto& [c, ln] : bound_cases()) {
      const BoundState st = dirac_energy(c, ln.first, ln.second);
      worst = std::max(worst, ode_residual(c, bound_radial(c, st, default_bound_grid(st))));
    }
    return worst;
  }));
  rep.checks.push_back(measure("ode-residual", "continuum_states", t.ode_residual, [] {
    double worst = 0.0;
    const Coupling c(0.2, 0.3);
    for (double e : {1.25, 2.0})
      for (int l : {-2, 0, 1}) {
        const double p = std::sqrt(e * e - 1.0);
        const auto grid = default_continuum_grid(p);
        worst = std::max(worst, ode_residual(c, continuum_radial(c, e, l, grid).first));
      }
    return worst;
  }));
}

void normalization(Report& rep, const Tolerances& t) {
  rep.checks.push_back(measure("normalization", "unit_norm", t.normalization, [] {
    double worst = 0.0;
    for (const auto& [c, ln] : bound_cases()) {
      const BoundState st = dirac_energy(c, ln.first, ln.second);
      const RadialSolution sol = bound_radial(c, st, default_bound_grid(st));
      worst = std::max(worst, std::abs(norm_integral(sol) - 1.0));
    }
    return worst;
  }));
}

void unitarity(Report& rep, const Tolerances& t) {
  rep.checks.push_back(measure("unitarity", "s_matrix_modulus", t.unitarity, [] {
    double worst = 0.0;
    for (double a : {0.1, 0.3})
      for (double flux : {0.0, 0.25}) {
        const Coupling c(a, flux);
        for (double e : {1.1, 1.5, 3.0})
          for (int l = -30; l <= 30; ++l) {
            if (make_channel(c, l).regime != Regime::Subcritical) continue;
            worst = std::max(worst, std::abs(std::abs(phase_shift(c, e, l).s_matrix) - 1.0));
          }
      }
    return worst;
  }));
}

void cross_section(Report& rep, const Tolerances& t) {
  rep.checks.push_back(measure("cross-section", "bracket_vs_modulus", t.cross_section, [] {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double phi = 0.1 + (2.0 * kPi - 0.2) * u(rng);
      const double a = 0.45 * u(rng);
      const double flux = -2.0 + 4.0 * u(rng);
      const double p = 0.1 + 4.9 * u(rng);
      const Coupling c(a, flux);
      const AngularSample s = total_amplitude(phi, c, p);
      const double b = cross_section_bracket(phi, c, p);
      if (s.dsigma < 0.0 || b < -1e-300) return kInf;
      worst = std::max(worst, std::abs(s.dsigma - b) / std::max(std::abs(b), std::abs(s.dsigma)));
    }
    return worst;
  }));
}

}  // namespace

std::optional<Profile> parse_profile(std::string_view name) {
  if (name == "default" || name.empty()) return Profile::Default;
  if (name == "strict") return Profile::Strict;
  return std::nullopt;
}

Tolerances Tolerances::for_profile(Profile p) {
  Tolerances t;
  if (p == Profile::Strict) {
    t.pole_spectrum = 1e-12;
    t.semiclassical = 1e-15;
    t.partial_wave = 1e-5;
    t.partial_wave_zero = 1e-8;
    t.ode_residual = 1e-7;
    t.normalization = 1e-10;
    t.unitarity = 1e-13;
    t.cross_section = 1e-13;
  }
  return t;
}

Tolerances Tolerances::uniform(double value) {
  Tolerances t;
  t.pole_spectrum = t.semiclassical = t.partial_wave = t.partial_wave_zero = value;
  t.ode_residual = t.normalization = t.unitarity = t.cross_section = value;
  return t;
}

const char* suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::PoleSpectrum: return "pole-spectrum";
    case Suite::Semiclassical: return "semiclassical";
    case Suite::PartialWave: return "partial-wave";
    case Suite::OdeResidual: return "ode-residual";
    case Suite::Normalization: return "normalization";
    case Suite::Unitarity: return "unitarity";
    case Suite::CrossSection: return "cross-section";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::PoleSpectrum, Suite::Semiclassical, Suite::PartialWave, Suite::OdeResidual,
          Suite::Normalization, Suite::Unitarity,    Suite::CrossSection};
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites())
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report run(unsigned suites, const Tolerances& t) {
  Report rep;
  auto on = [&](Suite s) { return (suites & static_cast<unsigned>(s)) != 0u; };
  if (on(Suite::PoleSpectrum)) pole_spectrum(rep, t);
  if (on(Suite::Semiclassical)) semiclassical(rep, t);
  if (on(Suite::PartialWave)) partial_wave(rep, t);
  if (on(Suite::OdeResidual)) ode_residual_suite(rep, t);
  if (on(Suite::Normalization)) normalization(rep, t);
  if (on(Suite::Unitarity)) unitarity(rep, t);
  if (on(Suite::CrossSection)) cross_section(rep, t);
  return rep;
}

}  // namespace abc::validation
