#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "abc/spectrum.hpp"
#include "abc/tolerances.hpp"

namespace abc {

enum class SolutionKind { Bound, Continuum };

// Closed form of a bound solution in rho = 2 lambda r:
//   f = scale sqrt(m+E) e^{-rho/2} rho^{gamma-1} upper(rho)
//   g = scale sqrt(m-E) e^{-rho/2} rho^{gamma-1} lower(rho)
struct BoundProfile {
  double two_lambda = 0.0;
  double gamma_exp = 0.0;
  double upper_weight = 0.0;
  double lower_weight = 0.0;
  double scale = 1.0;
  std::vector<double> upper;  // polynomial coefficients, ascending powers
  std::vector<double> lower;

  std::pair<double, double> evaluate(double r) const;
};

struct RadialSolution {
  SolutionKind kind = SolutionKind::Bound;
  int l = 0;
  double energy = 0.0;
  std::vector<double> grid;
  std::vector<double> f;
  std::vector<double> g;
  std::optional<BoundProfile> profile;
};

struct ContinuumParams {
  double p = 0.0;
  double mu = 0.0;        // a E / p
  double mu_prime = 0.0;  // a m / p
  double xi = 0.0;        // in (-pi/2, pi/2]
  // phase of the large-r form f ~ sin(pr + asymptotic_phase + mu ln 2pr - pi l/2)
  double asymptotic_phase = 0.0;
};

struct TailCoefficient {
  double prefactor = 0.0;   // r-independent factor of the tail law
  double exponent = 0.0;    // gamma + n - 1/2, the power carried by sqrt(r) f
  double f_exponent = 0.0;  // gamma + n - 1, the power carried by f itself
  double tail_ratio = 0.0;  // g / f as r -> infinity
};

std::vector<double> default_bound_grid(const BoundState& st);
std::vector<double> default_continuum_grid(double p);

// Normalized bound solution sampled on `grid` (strictly ascending, r > 0).
RadialSolution bound_radial(const Coupling& c, const BoundState& st, std::span<const double> grid);

// Integral of f^2 + g^2 over (0, inf). Uses the closed form when present,
// otherwise the samples with power-law head and exponential tail.
// Throws QuadratureFailure when the error estimate exceeds tolerance.
double norm_integral(const RadialSolution& sol, double tolerance = tol::kNormalization);
RadialSolution normalize(const RadialSolution& sol);

ContinuumParams continuum_params(const Coupling& c, double energy, int l);
std::pair<RadialSolution, ContinuumParams> continuum_radial(const Coupling& c, double energy, int l,
                                                            std::span<const double> grid);

TailCoefficient bound_tail_coefficient(const Coupling& c, const BoundState& st);

// Scale: max |R| over interior points divided by the largest term magnitude.
// Pointwise: max over interior points of |R| / (term magnitudes at that point);
// dominated by stencil truncation where the solution decays.
enum class ResidualNorm { Scale, Pointwise };

// Residual of the first-order radial system, derivatives by 5-point finite
// differences on the solution grid.
double ode_residual(const Coupling& c, const RadialSolution& sol, ResidualNorm norm = ResidualNorm::Scale);

}  // namespace abc
