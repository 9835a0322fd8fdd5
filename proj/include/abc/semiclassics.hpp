#pragma once

#include <span>
#include <vector>

#include "abc/spectrum.hpp"

namespace abc {

struct ClassicalOrbit {
  double energy = 0.0;
  double angular_momentum = 0.0;  // L0
  double r_min = 0.0;
  double phi0 = 0.0;
};

// r_min = (L0 + eB) / sqrt(E^2 - m^2); throws DomainError unless E > m and r_min > 0.
ClassicalOrbit make_orbit(const Coupling& c, double energy, double angular_momentum, double phi0 = 0.0);

struct TrajectoryPoint {
  double phi = 0.0;
  double r = 0.0;
};

// r(phi) = r_min / cos(phi - phi0); DomainError where the cosine is not positive.
std::vector<TrajectoryPoint> classical_trajectory(const ClassicalOrbit& orbit, std::span<const double> phi_grid);

// Angle between incoming and outgoing asymptotic directions.
double deflection_angle(const ClassicalOrbit& orbit);

struct ActionVariables {
  double j_r = 0.0;
  double j_phi = 0.0;
};

ActionVariables quantized_actions(int l, int n);

double semiclassical_energy(const Coupling& c, const ActionVariables& av);

struct TopologicalCharge {
  double q = 0.0;
  long long integer_part = 0;  // floor(q)
  double defect = 0.0;         // in [0, 1)
};

TopologicalCharge topological_charge(double flux);

}  // namespace abc
