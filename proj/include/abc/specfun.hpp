#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "abc/tolerances.hpp"

namespace abc {

using Complex = std::complex<double>;

namespace specfun {

// Log-gamma on the branch obtained by continuing from the positive real
// axis, so arg Γ is continuous along lines of constant Re z.
// Throws PoleError at nonpositive integers, DomainError for non-finite z.
Complex ln_gamma(Complex z);
double arg_gamma(Complex z);

enum class KummerMethod { Polynomial, Series, TransformedSeries, Asymptotic, Continuation };

const char* kummer_method_name(KummerMethod m) noexcept;

struct SeriesReport {
  Complex value{};
  std::size_t terms_used = 0;
  bool converged = false;
  double est_rel_error = 0.0;
  KummerMethod method = KummerMethod::Series;
};

struct KummerOptions {
  double tail_tolerance = tol::kSeriesTail;
  double accept_tolerance = tol::kKummerAccept;
  std::size_t max_terms = tol::kMaxSeriesTerms;
};

// 1F1(a; c; z) for complex a and z, real c > 0. The returned report always
// has converged == true; failure of every route throws NoConvergence.
SeriesReport kummer_1f1(Complex a, double c, Complex z, const KummerOptions& opts = {});

// Individual routes. These never throw on slow convergence; inspect the
// report instead.
SeriesReport kummer_series(Complex a, double c, Complex z, const KummerOptions& opts = {});
SeriesReport kummer_asymptotic(Complex a, double c, Complex z, const KummerOptions& opts = {});
SeriesReport kummer_continuation(Complex a, double c, Complex z, const KummerOptions& opts = {});

// Coefficients q_k of 1F1(-n; c; x) = sum_k q_k x^k.
std::vector<double> kummer_polynomial(int n, double c);

// J_nu(x), nu >= 0, x >= 0.
double bessel_j(double order, double x);

double bessel_j_series(double order, double x, double* est_rel_error = nullptr);
double bessel_j_hankel(double order, double x, double* est_rel_error = nullptr);
double bessel_j_steed(double order, double x);

// Upper incomplete gamma Γ(s, x) for s > 0, x >= 0.
double upper_incomplete_gamma(double s, double x);

}  // namespace specfun
}  // namespace abc
