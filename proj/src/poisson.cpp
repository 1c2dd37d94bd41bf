#include "itercert/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace itercert {

PoissonSystem build_poisson(std::size_t n) {
  if (n < 1) {
    throw Error(errc::domain_error, "the grid needs at least one interior point");
  }
  const double h = 1.0 / static_cast<double>(n + 1);
  const double inv_h2 = 1.0 / (h * h);
  PoissonSystem sys{n, h, RealMatrix(n, n), RealVector(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    sys.a(i, i) = 2.0 * inv_h2;
    if (i + 1 < n) {
      sys.a(i, i + 1) = -inv_h2;
      sys.a(i + 1, i) = -inv_h2;
    }
    sys.b[i] = -1.0;
    sys.grid.push_back(static_cast<double>(i + 1) * h);
  }
  return sys;
}

Spectrum jacobi_spectrum_analytic(const PoissonSystem& sys) {
  // The Jacobi iteration matrix of the system has the closed-form spectrum
  // cos(m*pi/(n+1)); reuse the tridiagonal Toeplitz formula with the
  // normalized entries a = c = 1/2, b = 0 of I - D^{-1}A.
  Spectrum spec = tridiag_toeplitz_eigenvalues(0.5, 0.0, 0.5, sys.n);
  spec.method = SpectrumMethod::tridiag_closed_form;
  return spec;
}

RealVector exact_discrete_solution(const PoissonSystem& sys) {
  const DenseVector x = lu_solve(embed_real(sys.a), embed_real(sys.b));
  RealVector out(sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) out[i] = x[i].re;
  return out;
}

DemoReport run_demo(std::size_t n, DemoMethod method, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw Error(errc::domain_error, "demo tolerance must lie in (0,1)");
  }
  DemoReport report;
  report.n = n;
  report.method = method;
  report.tol = tol;
  report.observed = std::numeric_limits<double>::quiet_NaN();
  try {
    const PoissonSystem sys = build_poisson(n);
    const DenseMatrix ac = embed_real(sys.a);
    const Splitting split = method == DemoMethod::jacobi
                                ? jacobi_splitting(ac)
                                : gauss_seidel_splitting(ac);

    if (method == DemoMethod::jacobi) {
      report.certificate = certify_spectral(split, tol);
      const Spectrum analytic = jacobi_spectrum_analytic(sys);
      const double dist =
          multiset_distance(report.certificate.eigenvalues, analytic.eigenvalues);
      if (!(dist <= 1e-8)) {
        report.error = "analytic and computed Jacobi spectra disagree (distance " +
                       std::to_string(dist) + ")";
      }
    } else {
      report.certificate = certify_reich(sys.a, tol);
    }

    report.x_exact = exact_discrete_solution(sys);
    const DenseVector x_ref = embed_real(report.x_exact);
    const DenseVector x0(n);  // zero start
    IterateOptions opts;
    opts.tol = tol;
    report.trace = iterate(split, embed_real(sys.b), x0, opts, &x_ref);

    report.predicted_rate = report.certificate.predicted_rate;
    try {
      report.observed = observed_rate(report.trace);
    } catch (const Error& e) {
      if (e.code() != errc::insufficient_data) throw;
    }
    report.final_error_norm = report.trace.error_norms.back();
    report.final_update_norm = report.trace.update_norms.back();
  } catch (const Error& e) {
    report.error = std::string(error_label(e.code())) + ": " + e.what();
  }
  return report;
}

}  // namespace itercert
