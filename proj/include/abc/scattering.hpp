#pragma once

#include <optional>
#include <vector>

#include "abc/specfun.hpp"
#include "abc/spectrum.hpp"
#include "abc/tolerances.hpp"

namespace abc {

// eB = s + delta with delta in (-1/2, 1/2].
struct FluxDecomposition {
  int s = 0;
  double delta = 0.0;
};

FluxDecomposition decompose_flux(double flux);

// e^{-i (pi/2) |l + eB|}
Complex ab_partial_coefficient(int l, double flux);

// Closed-form Aharonov-Bohm amplitude. Throws ForwardSingularity when
// |sin(phi/2)| < 1e-12.
Complex ab_amplitude(double phi, double flux, double p);

struct PhaseShiftRecord {
  int l = 0;
  double delta_ab = 0.0;
  double delta_a = 0.0;
  double delta_total = 0.0;
  Complex s_matrix{};
};

PhaseShiftRecord phase_shift(const Coupling& c, double energy, int l);

// Records for l = -l_max..l_max. Throws SupercriticalError if any channel is.
std::vector<PhaseShiftRecord> phase_shifts(const Coupling& c, double energy, int l_max);

struct ContinuedSMatrix {
  std::optional<Complex> value;  // empty within the pole window
  bool near_pole = false;
  int pole_n = -1;
};

// Analytic continuation of e^{2 i delta_l} to 0 < E < m.
ContinuedSMatrix s_matrix_continued(const Coupling& c, double energy, int l);

// Pole energies for n = first admissible .. n_max, ascending in n.
std::vector<double> find_poles(const Coupling& c, int l, int n_max);

// Quasi-classical Coulomb amplitude.
Complex coulomb_amplitude(double phi, const Coupling& c, double p);

struct AngularSample {
  double phi = 0.0;
  Complex f_ab{};
  Complex f_a{};
  Complex f_tot{};
  double dsigma = 0.0;        // |f_tot|^2
  double interference = 0.0;  // cross term of the bracket form
};

AngularSample total_amplitude(double phi, const Coupling& c, double p);

// dsigma/dphi from the sin/cos bracket form.
double cross_section_bracket(double phi, const Coupling& c, double p);

enum class Resummation { None, Abel };

struct PartialWaveReport {
  Complex value{};
  Complex ab_part{};       // closed-form bracket
  Complex coulomb_part{};  // summed Coulomb difference
  double dispersion = 0.0;  // spread of the Abel extrapolants, relative
};

PartialWaveReport partial_wave_report(double phi, const Coupling& c, double p, int l_max,
                                      Resummation resummation = Resummation::Abel,
                                      double phi_min = tol::kPhiMin);

Complex partial_wave_sum(double phi, const Coupling& c, double p, int l_max,
                         Resummation resummation = Resummation::Abel, double phi_min = tol::kPhiMin);

}  // namespace abc
