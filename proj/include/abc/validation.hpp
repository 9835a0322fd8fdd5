#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abc::validation {

enum class Profile { Default, Strict };

std::optional<Profile> parse_profile(std::string_view name);

struct Tolerances {
  double pole_spectrum = 1e-10;   // times m
  double semiclassical = 1e-14;   // times m
  double partial_wave = 1e-4;     // absolute, fractional flux
  double partial_wave_zero = 1e-6;
  double ode_residual = 1e-6;
  double normalization = 1e-8;
  double unitarity = 1e-12;
  double cross_section = 1e-12;

  static Tolerances for_profile(Profile p);
  // every tolerance replaced by `value`
  static Tolerances uniform(double value);
};

enum class Suite : unsigned {
  PoleSpectrum = 1u << 0,
  Semiclassical = 1u << 1,
  PartialWave = 1u << 2,
  OdeResidual = 1u << 3,
  Normalization = 1u << 4,
  Unitarity = 1u << 5,
  CrossSection = 1u << 6,
};

inline constexpr unsigned kAllSuites = 0x7f;

const char* suite_name(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::vector<Check> checks;
  bool all_passed() const;
};

// Runs the selected suites (bitwise or of Suite values). Each check records
// the worst error over its parameter set; a thrown library error is a failed
// check with measured = inf.
Report run(unsigned suites, const Tolerances& tol);

}  // namespace abc::validation
