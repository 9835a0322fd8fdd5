#include "abc/semiclassics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "abc/errors.hpp"

namespace abc {

ClassicalOrbit make_orbit(const Coupling& c, double energy, double angular_momentum, double phi0) {
  const double m = c.mass();
  if (!(energy > m) || !std::isfinite(energy)) throw DomainError("classical orbit requires E > m");
  if (!std::isfinite(angular_momentum) || !std::isfinite(phi0)) throw DomainError("orbit parameters must be finite");
  ClassicalOrbit o;
  o.energy = energy;
  o.angular_momentum = angular_momentum;
  o.phi0 = phi0;
  o.r_min = (angular_momentum + c.flux()) / std::sqrt((energy - m) * (energy + m));
  if (!(o.r_min > 0.0)) throw DomainError("classical orbit requires L0 + eB > 0");
  return o;
}

std::vector<TrajectoryPoint> classical_trajectory(const ClassicalOrbit& orbit, std::span<const double> phi_grid) {
  std::vector<TrajectoryPoint> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    const double cs = std::cos(phi - orbit.phi0);
    if (!(cs > 0.0)) throw DomainError("trajectory angle outside |phi - phi0| < pi/2");
    out.push_back({phi, orbit.r_min / cs});
  }
  return out;
}

double deflection_angle(const ClassicalOrbit& orbit) {
  // two far points on each branch give the incoming and outgoing directions
  constexpr double near = 1e-3;
  constexpr double far = 1e-4;
  const double half = 0.5 * std::numbers::pi;
  auto point = [&](double phi) {
    const double r = orbit.r_min / std::cos(phi - orbit.phi0);
    return std::array<double, 2>{r * std::cos(phi), r * std::sin(phi)};
  };
  const auto a0 = point(orbit.phi0 - half + far);
  const auto a1 = point(orbit.phi0 - half + near);
  const auto b0 = point(orbit.phi0 + half - near);
  const auto b1 = point(orbit.phi0 + half - far);
  const double ix = a1[0] - a0[0], iy = a1[1] - a0[1];
  const double ox = b1[0] - b0[0], oy = b1[1] - b0[1];
  return std::atan2(ix * oy - iy * ox, ix * ox + iy * oy);
}

ActionVariables quantized_actions(int l, int n) {
  if (n < 0) throw InadmissibleQuantumNumber("radial action must be nonnegative");
  return {static_cast<double>(n), l + 0.5};
}

double semiclassical_energy(const Coupling& c, const ActionVariables& av) {
  if (!(av.j_r >= 0.0) || !std::isfinite(av.j_phi)) throw DomainError("radial action must be nonnegative");
  const double j = av.j_phi + c.flux();
  const double a = c.a();
  const double disc = (std::abs(j) - a) * (std::abs(j) + a);
  if (!(disc > 0.0)) throw SupercriticalError("semiclassical energy needs (J_phi + eB)^2 > a^2");
  const double ratio = a / (av.j_r + std::sqrt(disc));
  return c.mass() / std::sqrt(1.0 + ratio * ratio);
}

TopologicalCharge topological_charge(double flux) {
  if (!std::isfinite(flux)) throw DomainError("flux must be finite");
  const double fl = std::floor(flux);
  return {flux, static_cast<long long>(fl), flux - fl};
}

}  // namespace abc
