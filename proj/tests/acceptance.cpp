// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "itercert/certify.hpp"
#include "itercert/dense.hpp"
#include "itercert/iterative.hpp"
#include "itercert/matrix_market.hpp"
#include "itercert/poisson.hpp"
#include "itercert/report.hpp"
#include "itercert/sequences.hpp"
#include "itercert/spectral.hpp"
#include "testutil.hpp"

using namespace itercert;

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& message) {
    if (!ok) {
      pass = false;
      if (!detail.str().empty()) detail << "; ";
      detail << message;
    }
  }
  void require_time(double seconds, double budget) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "runtime %.2fs exceeds budget %.0fs", seconds,
                  budget);
    require(seconds < budget, buf);
  }
};

int criteria_failed = 0;

void report(int id, const std::string& name, const Criterion& c, double seconds) {
  std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", id, c.pass ? "PASS" : "FAIL",
              name.c_str(), seconds, c.detail.str().empty() ? "" : " -- ",
              c.detail.str().c_str());
  std::fflush(stdout);
  if (!c.pass) ++criteria_failed;
}

// Error-recurrence accumulator shared between criteria 2, 3 and 8:
// || (x_m - x) - S (x_{m-1} - x) || <= 1e-10 (1 + ||x||) on every recorded
// step of every convergent run.
struct RecurrenceCheck {
  double worst = 0.0;  // max violation ratio vs 1e-10 * scale
  std::size_t steps = 0;
  std::size_t runs = 0;

  void add(const IterationTrace& trace, const DenseMatrix& s, const DenseVector& x) {
    const double scale = 1.0 + vec_norm2(x);
    ++runs;
    for (std::size_t m = 1; m < trace.iterates.size(); ++m) {
      const DenseVector em = trace.iterates[m] - x;
      const DenseVector em_prev = trace.iterates[m - 1] - x;
      const double defect = vec_norm2(em - matvec(s, em_prev));
      worst = std::max(worst, defect / (1e-10 * scale));
      ++steps;
    }
  }
};

RecurrenceCheck recurrence;

void criterion1_jacobi_spectral_radius() {
  Criterion c;
  Stopwatch total;

  Stopwatch small;
  const PoissonSystem sys3 = build_poisson(3);
  const ConvergenceCertificate cert =
      certify_spectral(jacobi_splitting(embed_real(sys3.a)), 1e-10);
  const double expected = std::cos(std::numbers::pi / 4.0);
  c.require(std::abs(cert.spectral_radius - expected) <= 1e-8,
            "n=3 spectral radius " + std::to_string(cert.spectral_radius) +
                " differs from cos(pi/4)");
  c.require(cert.verdict == Verdict::converges, "n=3 verdict is not Converges");
  c.require_time(small.seconds(), 1.0);

  for (std::size_t n = 1; n <= 64; ++n) {
    const PoissonSystem sys = build_poisson(n);
    const Spectrum analytic = jacobi_spectrum_analytic(sys);
    const Spectrum qr =
        eigenvalues_qr(iteration_matrix(jacobi_splitting(embed_real(sys.a))));
    const double dist = multiset_distance(analytic.eigenvalues, qr.eigenvalues);
    if (dist > 1e-8) {
      c.require(false, "n=" + std::to_string(n) + " spectra differ by " +
                           std::to_string(dist));
      break;
    }
  }
  c.require_time(total.seconds(), 30.0);
  report(1, "Poisson Jacobi spectral radius (analytic vs QR, n<=64)", c,
         total.seconds());
}

void criterion2_gauss_seidel_poisson() {
  Criterion c;
  Stopwatch total;

  const PoissonSystem sys = build_poisson(3);
  const ConvergenceCertificate cert = certify_reich(sys.a, 1e-10);
  c.require(cert.verdict == Verdict::converges, "Reich verdict is not Converges");
  c.require(cert.criterion == CertCriterion::reich, "criterion is not Reich");

  const DemoReport demo = run_demo(3, DemoMethod::gauss_seidel, 1e-10);
  c.require(demo.error.empty(), "demo error: " + demo.error);
  c.require(demo.trace.status == IterationStatus::reached_tol,
            "iteration did not reach tolerance");
  const double x_norm = vec_norm2(embed_real(demo.x_exact));
  c.require(demo.final_error_norm <= 1e-9 * x_norm,
            "final error " + std::to_string(demo.final_error_norm) +
                " above 1e-9 * ||x||");
  c.require(demo.observed >= 0.49 && demo.observed <= 0.51,
            "observed rate " + std::to_string(demo.observed) +
                " outside [0.49, 0.51]");

  recurrence.add(demo.trace,
                 iteration_matrix(gauss_seidel_splitting(embed_real(sys.a))),
                 embed_real(demo.x_exact));

  c.require_time(total.seconds(), 1.0);
  report(2, "Gauss-Seidel on Poisson via Reich (n=3)", c, total.seconds());
}

void criterion3_sampled_biconditional() {
  Criterion c;
  Stopwatch total;
  auto rng = testutil::make_rng(20240811);
  std::uniform_int_distribution<std::size_t> dims(2, 32);

  int converge_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dims(rng);
    std::uniform_real_distribution<double> rho(0.3, 0.95);
    const auto lambdas = testutil::random_spectrum(rng, n, 0.05, rho(rng));
    const DenseMatrix s_planted = testutil::planted_spectrum_matrix(rng, lambdas);
    const Splitting split =
        custom_splitting(DenseMatrix::identity(n), -s_planted);  // A = I - S
    const DenseMatrix a = split.a1 + split.a2;
    const DenseVector b = testutil::random_vector(rng, n);
    const DenseVector x = lu_solve(a, b);
    const DenseMatrix s = iteration_matrix(split);
    for (int start = 0; start < 10; ++start) {
      IterateOptions opts;
      opts.max_iters = 20000;
      const IterationTrace trace =
          iterate(split, b, testutil::random_vector(rng, n), opts, &x);
      if (trace.status != IterationStatus::reached_tol) {
        ++converge_failures;
      } else {
        recurrence.add(trace, s, x);
      }
    }
  }
  c.require(converge_failures == 0,
            std::to_string(converge_failures) +
                " convergent-family runs missed the tolerance");

  int divergence_failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = dims(rng);
    std::uniform_real_distribution<double> rho(1.05, 3.0);
    const auto lambdas = testutil::random_spectrum(rng, n, 0.2, rho(rng));
    const DenseMatrix s_planted = testutil::planted_spectrum_matrix(rng, lambdas);
    const Splitting split = custom_splitting(DenseMatrix::identity(n), -s_planted);
    const DenseVector b = testutil::random_vector(rng, n);
    bool any_diverged = false;
    for (int start = 0; start < 10 && !any_diverged; ++start) {
      IterateOptions opts;
      opts.max_iters = 20000;
      const IterationTrace trace =
          iterate(split, b, testutil::random_vector(rng, n), opts);
      any_diverged = trace.status == IterationStatus::diverged;
    }
    if (!any_diverged) ++divergence_failures;
  }
  c.require(divergence_failures == 0,
            std::to_string(divergence_failures) +
                " divergent-family systems never diverged");

  c.require_time(total.seconds(), 120.0);
  report(3, "Spectral-radius biconditional, sampled (200 + 50 planted spectra)",
         c, total.seconds());
}

void criterion4_reich_sampled_soundness() {
  Criterion c;
  Stopwatch total;
  auto rng = testutil::make_rng(20240812);
  std::uniform_int_distribution<std::size_t> dims(2, 16);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);

  int counterexamples = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = dims(rng);
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    RealMatrix a(n, n);  // M^T M + I: symmetric PD, positive diagonal
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += m(k, i) * m(k, j);
        a(i, j) = acc + (i == j ? 1.0 : 0.0);
      }
    }

    const ConvergenceCertificate cert = certify_reich(a, 1e-10);
    const Splitting split = gauss_seidel_splitting(embed_real(a));
    const double rho = spectral_radius(eigenvalues_qr(iteration_matrix(split)));
    const IterationTrace trace = iterate(split, testutil::random_vector(rng, n),
                                         testutil::random_vector(rng, n));
    if (cert.verdict != Verdict::converges || rho >= 1.0 ||
        trace.status != IterationStatus::reached_tol) {
      ++counterexamples;
    }
  }
  c.require(counterexamples == 0,
            std::to_string(counterexamples) + " Reich counterexamples");
  c.require_time(total.seconds(), 60.0);
  report(4, "Reich sampled soundness (100 symmetric PD systems)", c,
         total.seconds());
}

void criterion5_jordan_decay() {
  Criterion c;
  Stopwatch total;

  for (double mod : {0.5, 0.9, 0.99}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const JordanBlockSpec block{{mod, 0.0}, k};
      const double norm_at_2000 = frobenius_norm(jordan_block_power(block, 2000));
      if (!(norm_at_2000 < 1e-6)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "|lambda|=%.2f k=%zu: ||J^2000||_F = %.3g >= 1e-6", mod, k,
                      norm_at_2000);
        c.require(false, buf);
      }
    }
  }

  for (double mod : {0.5, 0.9, 0.99}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const JordanBlockSpec block{{mod, 0.0}, k};
      bool dominated = true;
      for (unsigned long m = k; m <= 500 && dominated; ++m) {
        const DenseMatrix p = jordan_block_power(block, m);
        for (std::size_t i = 0; i < k && dominated; ++i) {
          for (std::size_t j = i; j < k && dominated; ++j) {
            const double bound = jordan_entry_bound(block.eigenvalue, j - i, m);
            dominated = bound >= cmod(p(i, j)) * (1.0 - 1e-12);
          }
        }
      }
      if (!dominated) {
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "|lambda|=%.2f k=%zu: entry bound fails to dominate", mod, k);
        c.require(false, buf);
      }
    }
  }

  bool binom_ok = true;
  for (unsigned long m = 0; m <= 200 && binom_ok; ++m)
    for (unsigned long k = 0; k <= m && binom_ok; ++k)
      binom_ok = binom_bound_check(m, k);
  c.require(binom_ok, "binomial bound sweep failed");

  c.require_time(total.seconds(), 30.0);
  report(5, "Jordan decay, entry bounds, binomial sweep", c, total.seconds());
}

void criterion6_ratio_test() {
  Criterion c;
  Stopwatch total;
  auto rng = testutil::make_rng(20240813);
  std::uniform_int_distribution<unsigned long> kd(0, 4);
  std::uniform_real_distribution<double> xd(0.05, 0.95);

  for (int trial = 0; trial < 50; ++trial) {
    const unsigned long k = kd(rng);
    const double x = xd(rng);
    SequenceProbe probe;
    probe.generator = [k, x](std::size_t n) { return testutil::poly_geom_term(k, x, n); };
    const RatioTestResult r = ratio_test(probe);
    if (!r.converges_to_zero || std::abs(r.ratio_limit - x) >= 0.01) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "k=%lu x=%.4f: L=%.4f verdict=%d", k, x,
                    r.ratio_limit, r.converges_to_zero ? 1 : 0);
      c.require(false, buf);
      continue;
    }
    const TailEstimate tail = tail_limit_estimate(probe);
    if (!tail.converged || std::abs(tail.estimate) >= 1e-8) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "k=%lu x=%.4f: tail estimate %.3g", k, x,
                    tail.estimate);
      c.require(false, buf);
    }
  }
  c.require_time(total.seconds(), 30.0);
  report(6, "Ratio test on (n+1)^k x^n (50 random cases)", c, total.seconds());
}

void criterion7_norm_property_suites() {
  Criterion c;
  Stopwatch total;
  auto rng = testutil::make_rng(20240814);

  // Scalar modulus/conjugate identities, 1e-12 relative.
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexScalar z = testutil::random_complex(rng, -10.0, 10.0);
    const ComplexScalar w = testutil::random_complex(rng, -10.0, 10.0);
    bool ok = std::abs(cmod(z * w) - cmod(z) * cmod(w)) <=
              1e-12 * (1.0 + cmod(z) * cmod(w));
    ok = ok && cmod(z + w) <= cmod(z) + cmod(w) + 1e-12;
    ok = ok && cmod(-z) == cmod(z);
    ok = ok && cmod(conj(z)) == cmod(z);
    ok = ok && z.re + conj(z).re == 2.0 * z.re;
    if (cmod(z) > 0.05) {
      const ComplexScalar inv = ComplexScalar{1.0, 0.0} / z;
      ok = ok && std::abs(cmod(inv) - 1.0 / cmod(z)) <= 1e-12 / cmod(z);
    }
    if (!ok) {
      c.require(false, "scalar identity failed at trial " + std::to_string(trial));
      break;
    }
  }

  // Finite sums.
  std::uniform_int_distribution<std::size_t> len(1, 32);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = len(rng);
    ComplexScalar sum{0.0, 0.0}, conj_sum{0.0, 0.0};
    double mod_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const ComplexScalar u = testutil::random_complex(rng, -5.0, 5.0);
      sum = sum + u;
      conj_sum = conj_sum + conj(u);
      mod_sum += cmod(u);
    }
    if (!(cmod(sum) <= mod_sum + 1e-12) || !(conj(sum) == conj_sum)) {
      c.require(false, "sum identity failed at trial " + std::to_string(trial));
      break;
    }
  }

  // Matrix-norm inequalities, 1e-9 slack.
  for (int trial = 0; trial < 1000; ++trial) {
    const DenseMatrix a = testutil::random_matrix(rng, 4, 4);
    const DenseMatrix b = testutil::random_matrix(rng, 4, 4);
    const DenseVector v = testutil::random_vector(rng, 4);
    const double na = induced_2norm(a);
    const double nb = induced_2norm(b);
    bool ok = na >= 0.0;
    ok = ok && na <= frobenius_norm(a) + 1e-9;
    ok = ok && vec_norm2(matvec(a, v)) <= na * vec_norm2(v) + 1e-9;
    ok = ok && induced_2norm(matmul(a, b)) <= na * nb + 1e-9;
    if (!ok) {
      c.require(false, "matrix norm inequality failed at trial " + std::to_string(trial));
      break;
    }
  }

  // Vector-norm properties.
  for (int trial = 0; trial < 1000; ++trial) {
    const DenseVector v1 = testutil::random_vector(rng, 6);
    const DenseVector v2 = testutil::random_vector(rng, 6);
    const ComplexScalar s = testutil::random_complex(rng, -3.0, 3.0);
    bool ok = vec_norm2(v1) >= 0.0;
    ok = ok && vec_norm2(v1 + v2) <= vec_norm2(v1) + vec_norm2(v2) + 1e-9;
    ok = ok && std::abs(vec_norm2(s * v1) - cmod(s) * vec_norm2(v1)) <=
                   1e-9 * (1.0 + cmod(s) * vec_norm2(v1));
    double max_mod = 0.0;
    for (std::size_t i = 0; i < v1.dim(); ++i) max_mod = std::max(max_mod, cmod(v1[i]));
    if (max_mod > eps_zero) ok = ok && vec_norm2(v1) > 0.0;
    if (!ok) {
      c.require(false, "vector norm property failed at trial " + std::to_string(trial));
      break;
    }
  }

  c.require_time(total.seconds(), 60.0);
  report(7, "Modulus/conjugate/norm property suites (1000 cases each)", c,
         total.seconds());
}

void criterion8_error_recurrence() {
  Criterion c;
  Stopwatch total;

  // Add the convergent Jacobi demo alongside the traces already collected
  // from criteria 2 and 3.
  const PoissonSystem sys = build_poisson(3);
  const DemoReport demo = run_demo(3, DemoMethod::jacobi, 1e-10);
  c.require(demo.error.empty(), "jacobi demo error: " + demo.error);
  recurrence.add(demo.trace, iteration_matrix(jacobi_splitting(embed_real(sys.a))),
                 embed_real(demo.x_exact));

  char buf[128];
  std::snprintf(buf, sizeof(buf), "max defect %.3g of budget over %zu steps in %zu runs",
                recurrence.worst, recurrence.steps, recurrence.runs);
  c.detail << buf;
  c.require(recurrence.worst <= 1.0, "error recurrence identity violated");
  c.require(recurrence.runs >= 2001, "too few convergent runs collected");
  report(8, "Error recurrence identity across criteria 1-3 runs", c,
         total.seconds());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion9_cli_determinism() {
  Criterion c;
  Stopwatch total;

  const std::string cmd = std::string(ITERCERT_CLI_PATH) +
                          " poisson --n 3 --method jacobi --seed 7 >";
  const int rc1 = std::system((cmd + "acceptance_run1.json 2>/dev/null").c_str());
  const int rc2 = std::system((cmd + "acceptance_run2.json 2>/dev/null").c_str());
  c.require(rc1 == 0 && rc2 == 0, "CLI invocation failed");
  if (rc1 == 0 && rc2 == 0) {
    nlohmann::json a = nlohmann::json::parse(slurp("acceptance_run1.json"));
    nlohmann::json b = nlohmann::json::parse(slurp("acceptance_run2.json"));
    c.require(validate_report(a).empty(), "report does not match the schema");
    a.erase("timing_ms");
    b.erase("timing_ms");
    c.require(a.dump() == b.dump(), "reports differ beyond the timing field");
  }
  std::remove("acceptance_run1.json");
  std::remove("acceptance_run2.json");

  c.require_time(total.seconds(), 1.0);
  report(9, "CLI determinism (poisson --n 3 --seed 7, timing excluded)", c,
         total.seconds());
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1_jacobi_spectral_radius();
  criterion2_gauss_seidel_poisson();
  criterion3_sampled_biconditional();
  criterion4_reich_sampled_soundness();
  criterion5_jordan_decay();
  criterion6_ratio_test();
  criterion7_norm_property_suites();
  criterion8_error_recurrence();
  criterion9_cli_determinism();
  if (criteria_failed > 0) {
    std::printf("%d criterion(s) failed\n", criteria_failed);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
