#pragma once

#include <optional>
#include <vector>

namespace abc {

// External field configuration in units hbar = c = 1.
class Coupling {
 public:
  // Throws ConfigError unless a >= 0, mass > 0, eta = +-1, all finite.
  Coupling(double a, double flux, double mass = 1.0, int eta = 1);

  double a() const noexcept { return a_; }
  double flux() const noexcept { return flux_; }  // eB = e Phi / 2 pi
  double mass() const noexcept { return mass_; }
  int eta() const noexcept { return eta_; }

  Coupling with_a(double a) const { return Coupling(a, flux_, mass_, eta_); }
  Coupling with_flux(double flux) const { return Coupling(a_, flux, mass_, eta_); }

 private:
  double a_;
  double flux_;
  double mass_;
  int eta_;
};

enum class Regime { Subcritical, Supercritical };

const char* regime_name(Regime r) noexcept;

struct Channel {
  int l = 0;
  double kappa = 0.0;  // l + eB + 1/2
  double nu = 0.0;     // |l + eB|
  std::optional<double> gamma_exp;
  Regime regime = Regime::Supercritical;
};

struct QuantumNumberRange {
  int first = 0;
  bool contains(int n) const noexcept { return n >= first; }
};

struct BoundState {
  int l = 0;
  int n = 0;
  double energy = 0.0;
  double lambda = 0.0;
  double gamma_exp = 0.0;
};

Channel make_channel(const Coupling& c, int l);

// Throws SupercriticalError, or InadmissibleQuantumNumber at kappa == 0.
QuantumNumberRange admissible_n(const Channel& ch);

BoundState dirac_energy(const Coupling& c, int l, int n);

// Klein-Gordon levels, n >= 1; requires (l + eB)^2 > a^2.
double kg_energy(const Coupling& c, int l, int n);

enum class ChannelStatus { Ok, Supercritical, Inadmissible };

struct ChannelSummary {
  int l = 0;
  Regime regime = Regime::Supercritical;
  ChannelStatus status = ChannelStatus::Ok;
};

struct SpectrumTable {
  std::vector<BoundState> levels;  // sorted by (l, n)
  std::vector<ChannelSummary> channels;
  bool zero_coupling = false;
};

// Levels with n <= n_max for every l in [l_min, l_max].
SpectrumTable spectrum_table(const Coupling& c, int l_min, int l_max, int n_max);

}  // namespace abc
