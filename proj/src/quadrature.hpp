#pragma once

#include <functional>

namespace abc::detail {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b].
QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           double rel_tol, int max_intervals = 2000);

// Weights of the first derivative at z from the nodes x[0..n).
void derivative_weights(double z, const double* x, int n, double* w);

}  // namespace abc::detail
