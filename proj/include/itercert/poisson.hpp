#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "itercert/certify.hpp"
#include "itercert/dense.hpp"
#include "itercert/iterative.hpp"
#include "itercert/spectral.hpp"

namespace itercert {

// Central-difference discretization of d^2u/dx^2 = 1 on (0,1) with
// u(0) = u(1) = 0: n interior points, spacing h = 1/(n+1), tridiagonal
// coefficient matrix with 2/h^2 on and -1/h^2 off the diagonal, right-hand
// side identically -1.
struct PoissonSystem {
  std::size_t n;
  double h;
  RealMatrix a;
  RealVector b;
  std::vector<double> grid;  // x_i = i*h, i = 1..n
};

PoissonSystem build_poisson(std::size_t n);

// Spectrum {cos(m*pi/(n+1)) : m = 1..n} of the Jacobi iteration matrix; the
// same matrix arises from the system and from its negation.
Spectrum jacobi_spectrum_analytic(const PoissonSystem& sys);

// Direct solution A^{-1} b; equals x(x-1)/2 at the grid points because
// central differences are exact on quadratics.
RealVector exact_discrete_solution(const PoissonSystem& sys);

enum class DemoMethod { jacobi, gauss_seidel };

struct DemoReport {
  std::size_t n = 0;
  DemoMethod method = DemoMethod::jacobi;
  double tol = 0.0;
  ConvergenceCertificate certificate;
  IterationTrace trace;
  RealVector x_exact{1};
  double predicted_rate = 0.0;
  double observed = 0.0;  // NaN when the trace is too short for a rate
  double final_error_norm = 0.0;
  double final_update_norm = 0.0;
  std::string error;  // empty on a clean run
};

// End-to-end demo: build the system, certify (Reich for Gauss-Seidel,
// spectral for Jacobi cross-checked against the analytic spectrum), iterate
// from x0 = 0 with the given tolerance, and summarize.
DemoReport run_demo(std::size_t n, DemoMethod method, double tol);

}  // namespace itercert
