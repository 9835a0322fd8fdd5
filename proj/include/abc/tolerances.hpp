#pragma once

#include <cstddef>

// Every numerical threshold used by the library lives here.
namespace abc::tol {

// special functions
inline constexpr double kPoleWindow = 1e-12;
inline constexpr double kTerminatingWindow = 1e-12;
inline constexpr double kSeriesTail = 1e-15;
inline constexpr double kKummerAccept = 1e-11;
inline constexpr std::size_t kMaxSeriesTerms = 10000;
inline constexpr double kKummerAsymptoticRadius = 30.0;
inline constexpr double kBesselAccept = 1e-14;

// radial
inline constexpr double kNormalization = 1e-8;
inline constexpr double kQuadratureRel = 1e-13;
inline constexpr double kBoundGridRhoMin = 1e-4;
inline constexpr double kBoundGridRhoMax = 40.0;
inline constexpr std::size_t kBoundGridPoints = 2000;
inline constexpr double kContinuumGridMin = 1e-3;
inline constexpr double kContinuumGridMax = 20.0;
inline constexpr std::size_t kContinuumGridPoints = 4000;

// scattering
inline constexpr double kForwardSingularity = 1e-12;
inline constexpr double kPoleProximity = 1e-10;
inline constexpr double kPhiMin = 0.1;
inline constexpr double kAbelDispersion = 1e-3;
inline constexpr double kQuasiClassical = 0.03;
inline constexpr int kDefaultLMax = 60;

}  // namespace abc::tol
