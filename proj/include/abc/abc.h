/* C interface to the Aharonov-Bohm + Coulomb library.
 *
 * Every fallible call returns an abc_status; on failure abc_last_error()
 * holds a message for the calling thread. Handles are opaque and must be
 * released with the matching *_destroy function. Units: hbar = c = 1.
 */
#ifndef ABC_ABC_H
#define ABC_ABC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ABC_BUILDING_LIBRARY)
#    define ABC_API __declspec(dllexport)
#  else
#    define ABC_API __declspec(dllimport)
#  endif
#else
#  define ABC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abc_status {
  ABC_OK = 0,
  ABC_ERR_CONFIG = 1,
  ABC_ERR_DOMAIN = 2,
  ABC_ERR_POLE = 3,
  ABC_ERR_NO_CONVERGENCE = 4,
  ABC_ERR_SUPERCRITICAL = 5,
  ABC_ERR_INADMISSIBLE = 6,
  ABC_ERR_ZERO_COUPLING = 7,
  ABC_ERR_QUADRATURE = 8,
  ABC_ERR_FORWARD_SINGULARITY = 9,
  ABC_ERR_INVALID_ARGUMENT = 10,
  ABC_ERR_INTERNAL = 11
} abc_status;

ABC_API const char* abc_status_name(abc_status status);
ABC_API const char* abc_last_error(void);

/* ---- coupling ---------------------------------------------------------- */

typedef struct abc_coupling abc_coupling;

ABC_API abc_status abc_coupling_create(double a, double flux, double mass, int eta, abc_coupling** out);
ABC_API void abc_coupling_destroy(abc_coupling* c);
ABC_API double abc_coupling_a(const abc_coupling* c);
ABC_API double abc_coupling_flux(const abc_coupling* c);
ABC_API double abc_coupling_mass(const abc_coupling* c);

/* ---- special functions ------------------------------------------------- */

ABC_API abc_status abc_ln_gamma(double re, double im, double* out_re, double* out_im);
ABC_API abc_status abc_kummer_1f1(double a_re, double a_im, double c, double z_re, double z_im,
                                  double* out_re, double* out_im, double* est_rel_error);
ABC_API abc_status abc_bessel_j(double order, double x, double* out);

/* ---- spectrum ---------------------------------------------------------- */

typedef struct abc_channel_info {
  int l;
  double kappa;
  double nu;
  double gamma; /* NaN when supercritical */
  int subcritical;
} abc_channel_info;

typedef struct abc_bound_state {
  int l;
  int n;
  double energy;
  double lambda;
  double gamma;
} abc_bound_state;

enum { ABC_CHANNEL_OK = 0, ABC_CHANNEL_SUPERCRITICAL = 1, ABC_CHANNEL_INADMISSIBLE = 2 };

ABC_API abc_status abc_channel(const abc_coupling* c, int l, abc_channel_info* out);
ABC_API abc_status abc_admissible_n_min(const abc_coupling* c, int l, int* out);
ABC_API abc_status abc_dirac_energy(const abc_coupling* c, int l, int n, abc_bound_state* out);
ABC_API abc_status abc_kg_energy(const abc_coupling* c, int l, int n, double* out);

typedef struct abc_spectrum abc_spectrum;

ABC_API abc_status abc_spectrum_create(const abc_coupling* c, int l_min, int l_max, int n_max, abc_spectrum** out);
ABC_API void abc_spectrum_destroy(abc_spectrum* s);
ABC_API size_t abc_spectrum_level_count(const abc_spectrum* s);
ABC_API abc_status abc_spectrum_level(const abc_spectrum* s, size_t index, abc_bound_state* out);
ABC_API size_t abc_spectrum_channel_count(const abc_spectrum* s);
ABC_API abc_status abc_spectrum_channel(const abc_spectrum* s, size_t index, int* l, int* status);
ABC_API int abc_spectrum_zero_coupling(const abc_spectrum* s);

/* ---- radial ------------------------------------------------------------ */

typedef struct abc_radial abc_radial;

typedef struct abc_continuum_params {
  double p;
  double mu;
  double mu_prime;
  double xi;
  double asymptotic_phase;
} abc_continuum_params;

typedef struct abc_tail_coefficient {
  double prefactor;
  double exponent;
  double f_exponent;
  double tail_ratio;
} abc_tail_coefficient;

/* grid == NULL selects the default grid. Bound output is normalized. */
ABC_API abc_status abc_radial_bound(const abc_coupling* c, int l, int n, const double* grid, size_t count,
                                    abc_radial** out);
ABC_API abc_status abc_radial_continuum(const abc_coupling* c, double energy, int l, const double* grid,
                                        size_t count, abc_radial** out);
ABC_API void abc_radial_destroy(abc_radial* r);
ABC_API size_t abc_radial_size(const abc_radial* r);
/* Pointers stay valid until the handle is destroyed. */
ABC_API abc_status abc_radial_samples(const abc_radial* r, const double** grid, const double** f, const double** g);
ABC_API abc_status abc_radial_norm(const abc_radial* r, double* out);
ABC_API abc_status abc_radial_residual(const abc_radial* r, double* out);
ABC_API abc_status abc_radial_continuum_params(const abc_radial* r, abc_continuum_params* out);
ABC_API abc_status abc_bound_tail(const abc_coupling* c, int l, int n, abc_tail_coefficient* out);

/* ---- scattering -------------------------------------------------------- */

typedef struct abc_phase_shift_record {
  int l;
  double delta_ab;
  double delta_a;
  double delta_total;
  double s_re;
  double s_im;
} abc_phase_shift_record;

typedef struct abc_angular_sample {
  double phi;
  double f_ab_re, f_ab_im;
  double f_a_re, f_a_im;
  double f_tot_re, f_tot_im;
  double dsigma;
  double interference;
} abc_angular_sample;

/* Half-opening of the excluded forward cone, radians. */
ABC_API double abc_forward_cone(void);
ABC_API abc_status abc_decompose_flux(double flux, int* s, double* delta);
ABC_API abc_status abc_phase_shift(const abc_coupling* c, double energy, int l, abc_phase_shift_record* out);
ABC_API abc_status abc_s_matrix_continued(const abc_coupling* c, double energy, int l, double* re, double* im,
                                          int* near_pole, int* pole_n);
/* Writes up to `capacity` energies; *count receives the number available. */
ABC_API abc_status abc_find_poles(const abc_coupling* c, int l, int n_max, double* out, size_t capacity,
                                  size_t* count);
ABC_API abc_status abc_total_amplitude(const abc_coupling* c, double phi, double p, abc_angular_sample* out);
ABC_API abc_status abc_cross_section_bracket(const abc_coupling* c, double phi, double p, double* out);
/* abel != 0 selects Abel resummation of the Coulomb series. */
ABC_API abc_status abc_partial_wave_sum(const abc_coupling* c, double phi, double p, int l_max, int abel,
                                        double* re, double* im);

/* ---- semiclassics ------------------------------------------------------ */

ABC_API abc_status abc_semiclassical_energy(const abc_coupling* c, double j_r, double j_phi, double* out);
ABC_API abc_status abc_classical_trajectory(const abc_coupling* c, double energy, double angular_momentum,
                                            double phi0, const double* phi, size_t count, double* r_out);
ABC_API abc_status abc_topological_charge(double flux, double* q, long long* integer_part, double* defect);

/* ---- validation -------------------------------------------------------- */

typedef struct abc_tolerances {
  double pole_spectrum;
  double semiclassical;
  double partial_wave;
  double partial_wave_zero;
  double ode_residual;
  double normalization;
  double unitarity;
  double cross_section;
} abc_tolerances;

typedef struct abc_check {
  const char* suite;
  const char* name;
  double measured;
  double tolerance;
  int passed;
} abc_check;

typedef struct abc_validation abc_validation;

/* name: "default" or "strict" */
ABC_API abc_status abc_tolerances_for_profile(const char* name, abc_tolerances* out);
/* 0 for an unknown name */
ABC_API unsigned abc_suite_from_name(const char* name);
ABC_API unsigned abc_all_suites(void);
ABC_API abc_status abc_validation_run(unsigned suites, const abc_tolerances* tol, abc_validation** out);
ABC_API void abc_validation_destroy(abc_validation* v);
ABC_API size_t abc_validation_count(const abc_validation* v);
ABC_API abc_status abc_validation_check(const abc_validation* v, size_t index, abc_check* out);
ABC_API int abc_validation_passed(const abc_validation* v);

#ifdef __cplusplus
}
#endif

#endif /* ABC_ABC_H */
