#include "abc/abc.h"

#include <cmath>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "abc/errors.hpp"
#include "abc/radial.hpp"
#include "abc/scattering.hpp"
#include "abc/semiclassics.hpp"
#include "abc/specfun.hpp"
#include "abc/spectrum.hpp"
#include "abc/tolerances.hpp"
#include "abc/validation.hpp"

struct abc_coupling {
  abc::Coupling value;
};

struct abc_spectrum {
  abc::SpectrumTable table;
};

struct abc_radial {
  abc::RadialSolution sol;
  abc::Coupling coupling;
  bool has_params = false;
  abc::ContinuumParams params{};
};

struct abc_validation {
  abc::validation::Report report;
};

namespace {

thread_local std::string g_last_error;

abc_status map_code(abc::ErrorCode code) {
  switch (code) {
    case abc::ErrorCode::Config: return ABC_ERR_CONFIG;
    case abc::ErrorCode::Domain: return ABC_ERR_DOMAIN;
    case abc::ErrorCode::Pole: return ABC_ERR_POLE;
    case abc::ErrorCode::NoConvergence: return ABC_ERR_NO_CONVERGENCE;
    case abc::ErrorCode::Supercritical: return ABC_ERR_SUPERCRITICAL;
    case abc::ErrorCode::InadmissibleQuantumNumber: return ABC_ERR_INADMISSIBLE;
    case abc::ErrorCode::ZeroCoupling: return ABC_ERR_ZERO_COUPLING;
    case abc::ErrorCode::QuadratureFailure: return ABC_ERR_QUADRATURE;
    case abc::ErrorCode::ForwardSingularity: return ABC_ERR_FORWARD_SINGULARITY;
  }
  return ABC_ERR_INTERNAL;
}

template <class F>
abc_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ABC_OK;
  } catch (const abc::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ABC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ABC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ABC_ERR_INTERNAL;
  }
}

abc_status invalid(const char* what) {
  g_last_error = what;
  return ABC_ERR_INVALID_ARGUMENT;
}

#define ABC_REQUIRE(cond)                                 \
  do {                                                    \
    if (!(cond)) return invalid("invalid argument: " #cond); \
  } while (0)

void fill(const abc::BoundState& st, abc_bound_state* out) {
  *out = {st.l, st.n, st.energy, st.lambda, st.gamma_exp};
}

}  // namespace

extern "C" {

const char* abc_status_name(abc_status status) {
  switch (status) {
    case ABC_OK: return "ok";
    case ABC_ERR_CONFIG: return "config";
    case ABC_ERR_DOMAIN: return "domain";
    case ABC_ERR_POLE: return "pole";
    case ABC_ERR_NO_CONVERGENCE: return "no_convergence";
    case ABC_ERR_SUPERCRITICAL: return "supercritical";
    case ABC_ERR_INADMISSIBLE: return "inadmissible_quantum_number";
    case ABC_ERR_ZERO_COUPLING: return "zero_coupling";
    case ABC_ERR_QUADRATURE: return "quadrature_failure";
    case ABC_ERR_FORWARD_SINGULARITY: return "forward_singularity";
    case ABC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ABC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* abc_last_error(void) { return g_last_error.c_str(); }

abc_status abc_coupling_create(double a, double flux, double mass, int eta, abc_coupling** out) {
  ABC_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new abc_coupling{abc::Coupling(a, flux, mass, eta)}; });
}

void abc_coupling_destroy(abc_coupling* c) { delete c; }
double abc_coupling_a(const abc_coupling* c) { return c ? c->value.a() : std::nan(""); }
double abc_coupling_flux(const abc_coupling* c) { return c ? c->value.flux() : std::nan(""); }
double abc_coupling_mass(const abc_coupling* c) { return c ? c->value.mass() : std::nan(""); }

abc_status abc_ln_gamma(double re, double im, double* out_re, double* out_im) {
  ABC_REQUIRE(out_re && out_im);
  return guard([&] {
    const abc::Complex v = abc::specfun::ln_gamma({re, im});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

abc_status abc_kummer_1f1(double a_re, double a_im, double c, double z_re, double z_im, double* out_re,
                          double* out_im, double* est_rel_error) {
  ABC_REQUIRE(out_re && out_im);
  return guard([&] {
    const abc::specfun::SeriesReport r = abc::specfun::kummer_1f1({a_re, a_im}, c, {z_re, z_im});
    *out_re = r.value.real();
    *out_im = r.value.imag();
    if (est_rel_error) *est_rel_error = r.est_rel_error;
  });
}

abc_status abc_bessel_j(double order, double x, double* out) {
  ABC_REQUIRE(out);
  return guard([&] { *out = abc::specfun::bessel_j(order, x); });
}

abc_status abc_channel(const abc_coupling* c, int l, abc_channel_info* out) {
  ABC_REQUIRE(c && out);
  return guard([&] {
    const abc::Channel ch = abc::make_channel(c->value, l);
    *out = {ch.l, ch.kappa, ch.nu, ch.gamma_exp.value_or(std::numeric_limits<double>::quiet_NaN()),
            ch.regime == abc::Regime::Subcritical ? 1 : 0};
  });
}

abc_status abc_admissible_n_min(const abc_coupling* c, int l, int* out) {
  ABC_REQUIRE(c && out);
  return guard([&] { *out = abc::admissible_n(abc::make_channel(c->value, l)).first; });
}

abc_status abc_dirac_energy(const abc_coupling* c, int l, int n, abc_bound_state* out) {
  ABC_REQUIRE(c && out);
  return guard([&] { fill(abc::dirac_energy(c->value, l, n), out); });
}

abc_status abc_kg_energy(const abc_coupling* c, int l, int n, double* out) {
  ABC_REQUIRE(c && out);
  return guard([&] { *out = abc::kg_energy(c->value, l, n); });
}

abc_status abc_spectrum_create(const abc_coupling* c, int l_min, int l_max, int n_max, abc_spectrum** out) {
  ABC_REQUIRE(c && out);
  *out = nullptr;
  return guard([&] { *out = new abc_spectrum{abc::spectrum_table(c->value, l_min, l_max, n_max)}; });
}

void abc_spectrum_destroy(abc_spectrum* s) { delete s; }
size_t abc_spectrum_level_count(const abc_spectrum* s) { return s ? s->table.levels.size() : 0; }

abc_status abc_spectrum_level(const abc_spectrum* s, size_t index, abc_bound_state* out) {
  ABC_REQUIRE(s && out && index < s->table.levels.size());
  fill(s->table.levels[index], out);
  return ABC_OK;
}

size_t abc_spectrum_channel_count(const abc_spectrum* s) { return s ? s->table.channels.size() : 0; }

abc_status abc_spectrum_channel(const abc_spectrum* s, size_t index, int* l, int* status) {
  ABC_REQUIRE(s && l && status && index < s->table.channels.size());
  const abc::ChannelSummary& ch = s->table.channels[index];
  *l = ch.l;
  switch (ch.status) {
    case abc::ChannelStatus::Ok: *status = ABC_CHANNEL_OK; break;
    case abc::ChannelStatus::Supercritical: *status = ABC_CHANNEL_SUPERCRITICAL; break;
    case abc::ChannelStatus::Inadmissible: *status = ABC_CHANNEL_INADMISSIBLE; break;
  }
  return ABC_OK;
}

int abc_spectrum_zero_coupling(const abc_spectrum* s) { return s && s->table.zero_coupling ? 1 : 0; }

abc_status abc_radial_bound(const abc_coupling* c, int l, int n, const double* grid, size_t count,
                            abc_radial** out) {
  ABC_REQUIRE(c && out && (grid == nullptr || count > 0));
  *out = nullptr;
  return guard([&] {
    const abc::BoundState st = abc::dirac_energy(c->value, l, n);
    std::vector<double> g = grid ? std::vector<double>(grid, grid + count) : abc::default_bound_grid(st);
    auto h = std::make_unique<abc_radial>(abc_radial{abc::bound_radial(c->value, st, g), c->value});
    *out = h.release();
  });
}

abc_status abc_radial_continuum(const abc_coupling* c, double energy, int l, const double* grid, size_t count,
                                abc_radial** out) {
  ABC_REQUIRE(c && out && (grid == nullptr || count > 0));
  *out = nullptr;
  return guard([&] {
    const abc::ContinuumParams cp = abc::continuum_params(c->value, energy, l);
    std::vector<double> g = grid ? std::vector<double>(grid, grid + count) : abc::default_continuum_grid(cp.p);
    auto [sol, params] = abc::continuum_radial(c->value, energy, l, g);
    auto h = std::make_unique<abc_radial>(abc_radial{std::move(sol), c->value, true, params});
    *out = h.release();
  });
}

void abc_radial_destroy(abc_radial* r) { delete r; }
size_t abc_radial_size(const abc_radial* r) { return r ? r->sol.grid.size() : 0; }

abc_status abc_radial_samples(const abc_radial* r, const double** grid, const double** f, const double** g) {
  ABC_REQUIRE(r);
  if (grid) *grid = r->sol.grid.data();
  if (f) *f = r->sol.f.data();
  if (g) *g = r->sol.g.data();
  return ABC_OK;
}

abc_status abc_radial_norm(const abc_radial* r, double* out) {
  ABC_REQUIRE(r && out);
  return guard([&] { *out = abc::norm_integral(r->sol); });
}

abc_status abc_radial_residual(const abc_radial* r, double* out) {
  ABC_REQUIRE(r && out);
  return guard([&] { *out = abc::ode_residual(r->coupling, r->sol); });
}

abc_status abc_radial_continuum_params(const abc_radial* r, abc_continuum_params* out) {
  ABC_REQUIRE(r && out);
  if (!r->has_params) return invalid("not a continuum solution");
  *out = {r->params.p, r->params.mu, r->params.mu_prime, r->params.xi, r->params.asymptotic_phase};
  return ABC_OK;
}

abc_status abc_bound_tail(const abc_coupling* c, int l, int n, abc_tail_coefficient* out) {
  ABC_REQUIRE(c && out);
  return guard([&] {
    const abc::TailCoefficient t = abc::bound_tail_coefficient(c->value, abc::dirac_energy(c->value, l, n));
    *out = {t.prefactor, t.exponent, t.f_exponent, t.tail_ratio};
  });
}

double abc_forward_cone(void) { return abc::tol::kPhiMin; }

abc_status abc_decompose_flux(double flux, int* s, double* delta) {
  ABC_REQUIRE(s && delta);
  return guard([&] {
    const abc::FluxDecomposition fd = abc::decompose_flux(flux);
    *s = fd.s;
    *delta = fd.delta;
  });
}

abc_status abc_phase_shift(const abc_coupling* c, double energy, int l, abc_phase_shift_record* out) {
  ABC_REQUIRE(c && out);
  return guard([&] {
    const abc::PhaseShiftRecord r = abc::phase_shift(c->value, energy, l);
    *out = {r.l, r.delta_ab, r.delta_a, r.delta_total, r.s_matrix.real(), r.s_matrix.imag()};
  });
}

abc_status abc_s_matrix_continued(const abc_coupling* c, double energy, int l, double* re, double* im,
                                  int* near_pole, int* pole_n) {
  ABC_REQUIRE(c && re && im && near_pole && pole_n);
  return guard([&] {
    const abc::ContinuedSMatrix s = abc::s_matrix_continued(c->value, energy, l);
    *near_pole = s.near_pole ? 1 : 0;
    *pole_n = s.pole_n;
    const abc::Complex v = s.value.value_or(abc::Complex(std::nan(""), std::nan("")));
    *re = v.real();
    *im = v.imag();
  });
}

abc_status abc_find_poles(const abc_coupling* c, int l, int n_max, double* out, size_t capacity, size_t* count) {
  ABC_REQUIRE(c && count && (out || capacity == 0));
  return guard([&] {
    const std::vector<double> poles = abc::find_poles(c->value, l, n_max);
    *count = poles.size();
    for (size_t i = 0; i < poles.size() && i < capacity; ++i) out[i] = poles[i];
  });
}

abc_status abc_total_amplitude(const abc_coupling* c, double phi, double p, abc_angular_sample* out) {
  ABC_REQUIRE(c && out);
  return guard([&] {
    const abc::AngularSample s = abc::total_amplitude(phi, c->value, p);
    *out = {s.phi,          s.f_ab.real(), s.f_ab.imag(), s.f_a.real(),  s.f_a.imag(),
            s.f_tot.real(), s.f_tot.imag(), s.dsigma,     s.interference};
  });
}

abc_status abc_cross_section_bracket(const abc_coupling* c, double phi, double p, double* out) {
  ABC_REQUIRE(c && out);
  return guard([&] { *out = abc::cross_section_bracket(phi, c->value, p); });
}

abc_status abc_partial_wave_sum(const abc_coupling* c, double phi, double p, int l_max, int abel, double* re,
                                double* im) {
  ABC_REQUIRE(c && re && im);
  return guard([&] {
    const abc::Complex v = abc::partial_wave_sum(phi, c->value, p, l_max,
                                                 abel ? abc::Resummation::Abel : abc::Resummation::None);
    *re = v.real();
    *im = v.imag();
  });
}

abc_status abc_semiclassical_energy(const abc_coupling* c, double j_r, double j_phi, double* out) {
  ABC_REQUIRE(c && out);
  return guard([&] { *out = abc::semiclassical_energy(c->value, {j_r, j_phi}); });
}

abc_status abc_classical_trajectory(const abc_coupling* c, double energy, double angular_momentum, double phi0,
                                    const double* phi, size_t count, double* r_out) {
  ABC_REQUIRE(c && (count == 0 || (phi && r_out)));
  return guard([&] {
    const abc::ClassicalOrbit o = abc::make_orbit(c->value, energy, angular_momentum, phi0);
    const auto pts = abc::classical_trajectory(o, std::span<const double>(phi, count));
    for (size_t i = 0; i < pts.size(); ++i) r_out[i] = pts[i].r;
  });
}

abc_status abc_topological_charge(double flux, double* q, long long* integer_part, double* defect) {
  ABC_REQUIRE(q && integer_part && defect);
  return guard([&] {
    const abc::TopologicalCharge t = abc::topological_charge(flux);
    *q = t.q;
    *integer_part = t.integer_part;
    *defect = t.defect;
  });
}

abc_status abc_tolerances_for_profile(const char* name, abc_tolerances* out) {
  ABC_REQUIRE(out);
  const auto profile = abc::validation::parse_profile(name ? name : "");
  if (!profile) {
    g_last_error = std::string("unknown tolerance profile: ") + name;
    return ABC_ERR_CONFIG;
  }
  const auto t = abc::validation::Tolerances::for_profile(*profile);
  *out = {t.pole_spectrum, t.semiclassical, t.partial_wave, t.partial_wave_zero,
          t.ode_residual,  t.normalization, t.unitarity,    t.cross_section};
  return ABC_OK;
}

unsigned abc_suite_from_name(const char* name) {
  if (!name) return 0;
  const auto s = abc::validation::parse_suite(name);
  return s ? static_cast<unsigned>(*s) : 0u;
}

unsigned abc_all_suites(void) { return abc::validation::kAllSuites; }

abc_status abc_validation_run(unsigned suites, const abc_tolerances* tol, abc_validation** out) {
  ABC_REQUIRE(tol && out);
  *out = nullptr;
  if ((suites & abc::validation::kAllSuites) == 0u) {
    g_last_error = "empty suite selection";
    return ABC_ERR_CONFIG;
  }
  return guard([&] {
    abc::validation::Tolerances t;
    t.pole_spectrum = tol->pole_spectrum;
    t.semiclassical = tol->semiclassical;
    t.partial_wave = tol->partial_wave;
    t.partial_wave_zero = tol->partial_wave_zero;
    t.ode_residual = tol->ode_residual;
    t.normalization = tol->normalization;
    t.unitarity = tol->unitarity;
    t.cross_section = tol->cross_section;
    *out = new abc_validation{abc::validation::run(suites, t)};
  });
}

void abc_validation_destroy(abc_validation* v) { delete v; }
size_t abc_validation_count(const abc_validation* v) { return v ? v->report.checks.size() : 0; }

abc_status abc_validation_check(const abc_validation* v, size_t index, abc_check* out) {
  ABC_REQUIRE(v && out && index < v->report.checks.size());
  const abc::validation::Check& c = v->report.checks[index];
  *out = {c.suite.c_str(), c.name.c_str(), c.measured, c.tolerance, c.passed ? 1 : 0};
  return ABC_OK;
}

int abc_validation_passed(const abc_validation* v) { return v && v->report.all_passed() ? 1 : 0; }

}  // extern "C"
