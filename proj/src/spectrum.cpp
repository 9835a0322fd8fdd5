#include "abc/spectrum.hpp"

#include <cmath>
#include <string>

#include "abc/errors.hpp"

namespace abc {

Coupling::Coupling(double a, double flux, double mass, int eta)
    : a_(a), flux_(flux), mass_(mass), eta_(eta) {
  if (!std::isfinite(a) || !std::isfinite(flux) || !std::isfinite(mass))
    throw ConfigError("coupling parameters must be finite");
  if (a < 0.0) throw ConfigError("coupling strength a must be nonnegative");
  if (!(mass > 0.0)) throw ConfigError("mass must be positive");
  if (eta != 1 && eta != -1) throw ConfigError("eta must be +1 or -1");
}

const char* regime_name(Regime r) noexcept {
  return r == Regime::Subcritical ? "subcritical" : "supercritical";
}

Channel make_channel(const Coupling& c, int l) {
  Channel ch;
  ch.l = l;
  ch.kappa = l + c.flux() + 0.5;
  ch.nu = std::abs(l + c.flux());
  const double a = c.a();
  // (kappa - a)(kappa + a) keeps the difference of squares accurate
  const double disc = (std::abs(ch.kappa) - a) * (std::abs(ch.kappa) + a);
  if (disc > 0.0) {
    ch.regime = Regime::Subcritical;
    ch.gamma_exp = 0.5 + std::sqrt(disc);
  }
  return ch;
}

QuantumNumberRange admissible_n(const Channel& ch) {
  if (ch.regime != Regime::Subcritical)
    throw SupercriticalError("channel l = " + std::to_string(ch.l) + " is supercritical");
  if (ch.kappa == 0.0)
    throw InadmissibleQuantumNumber("kappa = 0 admits no quantum number");
  return {ch.kappa > 0.0 ? 0 : 1};
}

namespace {

double level(double mass, double a, double big_n) {
  const double ratio = a / big_n;
  return mass / std::sqrt(1.0 + ratio * ratio);
}

}  // namespace

BoundState dirac_energy(const Coupling& c, int l, int n) {
  if (c.a() == 0.0) throw ZeroCouplingError("no bound states at a = 0");
  const Channel ch = make_channel(c, l);
  const QuantumNumberRange range = admissible_n(ch);
  if (!range.contains(n))
    throw InadmissibleQuantumNumber("n = " + std::to_string(n) + " is not admissible for l = " +
                                    std::to_string(l));
  const double root = std::sqrt((std::abs(ch.kappa) - c.a()) * (std::abs(ch.kappa) + c.a()));
  const double big_n = n + root;
  const double m = c.mass();
  BoundState st;
  st.l = l;
  st.n = n;
  st.energy = level(m, c.a(), big_n);
  // sqrt(m^2 - E^2) = m a / sqrt(N^2 + a^2) without cancellation
  st.lambda = m * c.a() / std::hypot(big_n, c.a());
  st.gamma_exp = *ch.gamma_exp;
  return st;
}

double kg_energy(const Coupling& c, int l, int n) {
  if (c.a() == 0.0) throw ZeroCouplingError("no bound states at a = 0");
  const double j = std::abs(l + c.flux());
  const double disc = (j - c.a()) * (j + c.a());
  if (!(disc > 0.0))
    throw SupercriticalError("Klein-Gordon channel l = " + std::to_string(l) +
                             " needs (l + eB)^2 > a^2");
  if (n < 1) throw InadmissibleQuantumNumber("Klein-Gordon levels start at n = 1");
  return level(c.mass(), c.a(), n - 0.5 + std::sqrt(disc));
}

SpectrumTable spectrum_table(const Coupling& c, int l_min, int l_max, int n_max) {
  if (l_min > l_max) throw ConfigError("empty l range");
  if (n_max < 0) throw ConfigError("n_max must be nonnegative");
  SpectrumTable table;
  table.zero_coupling = c.a() == 0.0;
  for (int l = l_min; l <= l_max; ++l) {
    const Channel ch = make_channel(c, l);
    ChannelSummary summary{l, ch.regime, ChannelStatus::Ok};
    if (ch.regime != Regime::Subcritical) {
      summary.status = ChannelStatus::Supercritical;
    } else if (ch.kappa == 0.0) {
      summary.status = ChannelStatus::Inadmissible;
    } else if (!table.zero_coupling) {
      for (int n = admissible_n(ch).first; n <= n_max; ++n) table.levels.push_back(dirac_energy(c, l, n));
    }
    table.channels.push_back(summary);
  }
  return table;
}

}  // namespace abc
