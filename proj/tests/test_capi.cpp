#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "abc/abc.h"

namespace {

struct Coupling {
  abc_coupling* h = nullptr;
  Coupling(double a, double flux) { REQUIRE(abc_coupling_create(a, flux, 1.0, 1, &h) == ABC_OK); }
  ~Coupling() { abc_coupling_destroy(h); }
};

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(abc_status_name(ABC_OK)) == "ok");
  CHECK(std::string(abc_status_name(ABC_ERR_SUPERCRITICAL)) == "supercritical");
  abc_coupling* c = nullptr;
  CHECK(abc_coupling_create(-1.0, 0.0, 1.0, 1, &c) == ABC_ERR_CONFIG);
  CHECK(c == nullptr);
  CHECK(std::strlen(abc_last_error()) > 0);
  CHECK(abc_coupling_create(0.3, 0.0, 1.0, 1, nullptr) == ABC_ERR_INVALID_ARGUMENT);
  abc_coupling_destroy(nullptr);
}

TEST_CASE("spectrum through the C API") {
  Coupling c(0.3, 0.0);
  CHECK(abc_coupling_a(c.h) == 0.3);
  abc_bound_state st{};
  REQUIRE(abc_dirac_energy(c.h, 0, 0, &st) == ABC_OK);
  CHECK(std::abs(st.energy - 0.8) < 1e-15);
  CHECK(abc_dirac_energy(c.h, -2, 0, &st) == ABC_ERR_INADMISSIBLE);
  double e = 0.0;
  CHECK(abc_kg_energy(c.h, 0, 1, &e) == ABC_ERR_SUPERCRITICAL);
  REQUIRE(abc_kg_energy(c.h, 1, 1, &e) == ABC_OK);
  CHECK(std::abs(e - 0.97936919891410086950) < 1e-12);

  Coupling super(0.6, 0.0);
  abc_channel_info info{};
  REQUIRE(abc_channel(super.h, 0, &info) == ABC_OK);
  CHECK(info.subcritical == 0);
  CHECK(std::isnan(info.gamma));
  CHECK(abc_dirac_energy(super.h, 0, 0, &st) == ABC_ERR_SUPERCRITICAL);

  abc_spectrum* s = nullptr;
  REQUIRE(abc_spectrum_create(c.h, -1, 1, 2, &s) == ABC_OK);
  CHECK(abc_spectrum_level_count(s) > 0);
  CHECK(abc_spectrum_channel_count(s) == 3);
  CHECK(abc_spectrum_level(s, abc_spectrum_level_count(s), &st) == ABC_ERR_INVALID_ARGUMENT);
  abc_spectrum_destroy(s);

  Coupling zero(0.0, 0.0);
  REQUIRE(abc_spectrum_create(zero.h, 0, 0, 1, &s) == ABC_OK);
  CHECK(abc_spectrum_zero_coupling(s) == 1);
  CHECK(abc_spectrum_level_count(s) == 0);
  abc_spectrum_destroy(s);
}

TEST_CASE("radial handles") {
  Coupling c(0.3, 0.0);
  abc_radial* r = nullptr;
  REQUIRE(abc_radial_bound(c.h, 0, 1, nullptr, 0, &r) == ABC_OK);
  CHECK(abc_radial_size(r) > 100);
  double norm = 0.0, res = 1.0;
  REQUIRE(abc_radial_norm(r, &norm) == ABC_OK);
  CHECK(std::abs(norm - 1.0) < 1e-8);
  REQUIRE(abc_radial_residual(r, &res) == ABC_OK);
  CHECK(res < 1e-6);
  abc_continuum_params cp{};
  CHECK(abc_radial_continuum_params(r, &cp) == ABC_ERR_INVALID_ARGUMENT);
  abc_radial_destroy(r);

  const std::vector<double> grid{0.5, 1.0, 2.0, 4.0, 8.0};
  REQUIRE(abc_radial_continuum(c.h, 1.25, 0, grid.data(), grid.size(), &r) == ABC_OK);
  const double *gr = nullptr, *f = nullptr, *g = nullptr;
  REQUIRE(abc_radial_samples(r, &gr, &f, &g) == ABC_OK);
  CHECK(gr[2] == 2.0);
  CHECK(std::isfinite(f[4]));
  REQUIRE(abc_radial_continuum_params(r, &cp) == ABC_OK);
  CHECK(cp.p == doctest::Approx(0.75));
  abc_radial_destroy(r);

  CHECK(abc_radial_continuum(c.h, 0.5, 0, nullptr, 0, &r) == ABC_ERR_DOMAIN);
  CHECK(r == nullptr);
}

TEST_CASE("scattering through the C API") {
  Coupling c(0.2, 0.3);
  abc_phase_shift_record rec{};
  REQUIRE(abc_phase_shift(c.h, 1.25, 0, &rec) == ABC_OK);
  CHECK(rec.delta_total == doctest::Approx(-1.6727951371820111839).epsilon(1e-12));
  CHECK(std::hypot(rec.s_re, rec.s_im) == doctest::Approx(1.0).epsilon(1e-13));

  Coupling ab(0.0, 0.5);
  abc_angular_sample smp{};
  REQUIRE(abc_total_amplitude(ab.h, std::numbers::pi, 1.0, &smp) == ABC_OK);
  CHECK(smp.dsigma == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-13));
  double bracket = 0.0;
  REQUIRE(abc_cross_section_bracket(ab.h, std::numbers::pi, 1.0, &bracket) == ABC_OK);
  CHECK(bracket == doctest::Approx(smp.dsigma).epsilon(1e-12));
  CHECK(abc_total_amplitude(ab.h, 0.0, 1.0, &smp) == ABC_ERR_FORWARD_SINGULARITY);

  double re = 0.0, im = 0.0;
  Coupling quarter(0.0, 0.25);
  REQUIRE(abc_partial_wave_sum(quarter.h, 2.0, 1.0, 60, 1, &re, &im) == ABC_OK);
  REQUIRE(abc_total_amplitude(quarter.h, 2.0, 1.0, &smp) == ABC_OK);
  CHECK(std::hypot(re - smp.f_ab_re, im - smp.f_ab_im) < 1e-4);

  Coupling bound(0.3, 0.0);
  double poles[8];
  size_t count = 0;
  REQUIRE(abc_find_poles(bound.h, 0, 3, poles, 8, &count) == ABC_OK);
  REQUIRE(count == 4);
  CHECK(std::abs(poles[0] - 0.8) < 1e-10);
  int s = 0;
  double delta = 0.0;
  REQUIRE(abc_decompose_flux(2.25, &s, &delta) == ABC_OK);
  CHECK(s == 2);
  CHECK(delta == 0.25);
}

TEST_CASE("semiclassics through the C API") {
  Coupling c(0.3, 0.0);
  double e = 0.0;
  REQUIRE(abc_semiclassical_energy(c.h, 0.0, 0.5, &e) == ABC_OK);
  CHECK(std::abs(e - 0.8) < 1e-15);
  double q = 0.0, defect = 0.0;
  long long k = 0;
  REQUIRE(abc_topological_charge(-0.3, &q, &k, &defect) == ABC_OK);
  CHECK(k == -1);
  CHECK(defect == doctest::Approx(0.7));
  Coupling free(0.0, 0.25);
  const double phi[3] = {-0.5, 0.0, 0.5};
  double r[3];
  REQUIRE(abc_classical_trajectory(free.h, 1.25, 0.5, 0.0, phi, 3, r) == ABC_OK);
  CHECK(r[1] == doctest::Approx(1.0));
  CHECK(r[0] == doctest::Approx(r[2]));
}

TEST_CASE("validation through the C API") {
  abc_tolerances tol{};
  REQUIRE(abc_tolerances_for_profile("default", &tol) == ABC_OK);
  CHECK(tol.unitarity == 1e-12);
  CHECK(abc_tolerances_for_profile("loose", &tol) == ABC_ERR_CONFIG);
  CHECK(abc_suite_from_name("unitarity") != 0u);
  CHECK(abc_suite_from_name("nope") == 0u);

  REQUIRE(abc_tolerances_for_profile("default", &tol) == ABC_OK);
  abc_validation* v = nullptr;
  CHECK(abc_validation_run(0u, &tol, &v) == ABC_ERR_CONFIG);
  REQUIRE(abc_validation_run(abc_all_suites(), &tol, &v) == ABC_OK);
  CHECK(abc_validation_passed(v) == 1);
  REQUIRE(abc_validation_count(v) > 0);
  abc_check chk{};
  REQUIRE(abc_validation_check(v, 0, &chk) == ABC_OK);
  CHECK(std::strlen(chk.suite) > 0);
  abc_validation_destroy(v);

  abc_tolerances tiny{1e-30, 1e-30, 1e-30, 1e-30, 1e-30, 1e-30, 1e-30, 1e-30};
  REQUIRE(abc_validation_run(abc_all_suites(), &tiny, &v) == ABC_OK);
  CHECK(abc_validation_passed(v) == 0);
  abc_validation_destroy(v);
}
