#pragma once

#include <functional>
#include <vector>

#include "cyk/linalg.hpp"

namespace cyk {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], increasing
  std::vector<double> weights;
};

// Cached n-point Gauss-Legendre rule; safe to call from several threads.
const GaussRule& gauss_legendre(int n);

struct QuadratureOptions {
  int nodes = 24;
  double tol = 1e-12;
  int max_depth = 40;
};

struct QuadratureResult {
  CVec value;
  double error_estimate = 0.0;
  int panels = 0;
};

// Vector-valued integrand; every call must return the same length.
using Integrand = std::function<CVec(double)>;

// Adaptive composite Gauss-Legendre on [a, b]. A panel is accepted when the
// rule on the panel and on its two halves agree to within the panel's share
// of tol * max(1, |first estimate|). Throws QuadratureFailure past max_depth.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureOptions& opt);

}  // namespace cyk
