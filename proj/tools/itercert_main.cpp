#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "itercert/certify.hpp"
#include "itercert/dense.hpp"
#include "itercert/errors.hpp"
#include "itercert/iterative.hpp"
#include "itercert/matrix_market.hpp"
#include "itercert/poisson.hpp"
#include "itercert/report.hpp"
#include "itercert/spectral.hpp"

namespace {

using itercert::Error;
using itercert::errc;
using nlohmann::json;

struct Options {
  std::string command;
  std::string matrix_path;
  std::string rhs_path;
  std::string method = "jacobi";
  std::string criterion = "spectral";  // certify only
  std::string x0_mode = "zero";        // solve only
  std::string output = "json";
  double tol = 1e-10;
  double target_reduction = 1e-10;
  std::size_t max_iters = 100000;
  std::size_t poisson_n = 0;
  unsigned long seed = 0;
  bool force = false;
};

int exit_code_for(errc code) {
  switch (code) {
    case errc::usage_error:
    case errc::io_error:
    case errc::dimension_mismatch:
    case errc::index_out_of_range:
      return 2;
    default:
      return 3;
  }
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& opt, const json& report) {
  if (opt.output == "table") {
    std::cout << itercert::render_table(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

itercert::Splitting make_splitting(const itercert::DenseMatrix& a,
                                   const std::string& method) {
  if (method == "gauss-seidel") return itercert::gauss_seidel_splitting(a);
  return itercert::jacobi_splitting(a);
}

itercert::DenseVector starting_vector(const Options& opt, std::size_t n) {
  itercert::DenseVector x0(n);
  if (opt.x0_mode == "random") {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) x0[i] = {dist(rng), dist(rng)};
  }
  return x0;
}

int run_certify(const Options& opt) {
  Timer timer;
  const itercert::LoadedMatrix lm = itercert::load_matrix_market(opt.matrix_path);
  itercert::ConvergenceCertificate cert;
  if (opt.criterion == "reich") {
    if (!lm.real_values) {
      throw Error(errc::usage_error,
                  "the Reich criterion needs a real-valued matrix");
    }
    cert = itercert::certify_reich(*lm.real_values, opt.target_reduction);
  } else {
    cert = itercert::certify_spectral(make_splitting(lm.values, opt.method),
                                      opt.target_reduction);
  }
  emit(opt, itercert::make_report("certify", lm.values.rows(), opt.matrix_path,
                                  itercert::certificate_report(cert), std::nullopt,
                                  timer.elapsed_ms()));
  return 0;
}

int run_spectrum(const Options& opt) {
  Timer timer;
  const itercert::LoadedMatrix lm = itercert::load_matrix_market(opt.matrix_path);
  const itercert::Splitting split = make_splitting(lm.values, opt.method);
  // Eigensolver failures surface as E_EIG here, unlike certify which folds
  // them into an Unknown certificate.
  const itercert::Spectrum spec =
      itercert::eigenvalues_qr(itercert::iteration_matrix(split));
  itercert::ConvergenceCertificate cert =
      itercert::classify_spectrum(spec, opt.target_reduction);
  if (!cert.notes.empty()) cert.notes += "; ";
  cert.notes += "qr residual estimate " + std::to_string(spec.residual_estimate);
  emit(opt, itercert::make_report("spectrum", lm.values.rows(), opt.matrix_path,
                                  itercert::certificate_report(cert), std::nullopt,
                                  timer.elapsed_ms()));
  return 0;
}

int run_solve(const Options& opt) {
  Timer timer;
  const itercert::LoadedMatrix lm = itercert::load_matrix_market(opt.matrix_path);
  const itercert::DenseVector b = itercert::load_vector_matrix_market(opt.rhs_path);
  const itercert::Splitting split = make_splitting(lm.values, opt.method);
  const itercert::ConvergenceCertificate cert =
      itercert::certify_spectral(split, opt.target_reduction);

  if (cert.verdict == itercert::Verdict::diverges && !opt.force) {
    emit(opt, itercert::make_report("solve", lm.values.rows(), opt.matrix_path,
                                    itercert::certificate_report(cert), std::nullopt,
                                    timer.elapsed_ms()));
    std::cerr << "E_DIVERGES: certificate predicts divergence; "
                 "pass --force to iterate anyway\n";
    return 4;
  }

  itercert::IterateOptions iter_opts;
  iter_opts.tol = opt.tol;
  iter_opts.max_iters = opt.max_iters;
  const itercert::DenseVector x_ref = itercert::lu_solve(lm.values, b);
  const itercert::IterationTrace trace =
      itercert::iterate(split, b, starting_vector(opt, b.dim()), iter_opts, &x_ref);

  double observed = std::numeric_limits<double>::quiet_NaN();
  try {
    observed = itercert::observed_rate(trace);
  } catch (const Error& e) {
    if (e.code() != errc::insufficient_data) throw;
  }
  emit(opt, itercert::make_report(
                "solve", lm.values.rows(), opt.matrix_path,
                itercert::certificate_report(cert),
                itercert::trace_report(trace, observed, trace.error_norms.back()),
                timer.elapsed_ms()));
  return 0;
}

int run_poisson(const Options& opt) {
  Timer timer;
  const itercert::DemoMethod method = opt.method == "gauss-seidel"
                                          ? itercert::DemoMethod::gauss_seidel
                                          : itercert::DemoMethod::jacobi;
  const itercert::DemoReport demo = itercert::run_demo(opt.poisson_n, method, opt.tol);
  emit(opt, itercert::demo_report(demo, timer.elapsed_ms()));
  return demo.error.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary iterative solves with a priori convergence certificates"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--method", opt.method, "Splitting: jacobi or gauss-seidel")
        ->check(CLI::IsMember({"jacobi", "gauss-seidel"}));
    cmd->add_option("--output", opt.output, "Report format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--target-reduction", opt.target_reduction,
                    "Error reduction used for the iteration-count prediction");
  };

  CLI::App* certify = app.add_subcommand("certify", "Certify convergence for a matrix");
  certify->add_option("--matrix", opt.matrix_path, "Matrix Market file")->required();
  certify->add_option("--criterion", opt.criterion, "Certificate criterion")
      ->check(CLI::IsMember({"spectral", "reich"}));
  add_common(certify);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Iteration-matrix spectrum");
  spectrum->add_option("--matrix", opt.matrix_path, "Matrix Market file")->required();
  add_common(spectrum);

  CLI::App* solve = app.add_subcommand("solve", "Certify, then iterate to a solution");
  solve->add_option("--matrix", opt.matrix_path, "Matrix Market file")->required();
  solve->add_option("--rhs", opt.rhs_path, "Right-hand side (Matrix Market vector)")
      ->required();
  solve->add_option("--tol", opt.tol, "Relative update-norm stopping tolerance");
  solve->add_option("--max-iters", opt.max_iters, "Iteration budget");
  solve->add_option("--x0", opt.x0_mode, "Starting vector: zero or random")
      ->check(CLI::IsMember({"zero", "random"}));
  solve->add_option("--seed", opt.seed, "Seed for --x0 random");
  solve->add_flag("--force", opt.force, "Iterate even when the certificate says Diverges");
  add_common(solve);

  CLI::App* poisson = app.add_subcommand("poisson", "Certified demo on the 1D Poisson system");
  poisson->add_option("--n", opt.poisson_n, "Interior grid points")->required();
  poisson->add_option("--tol", opt.tol, "Relative update-norm stopping tolerance");
  poisson->add_option("--seed", opt.seed, "Recorded for reproducibility");
  add_common(poisson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E_USAGE: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!(opt.tol > 0.0 && opt.tol < 1.0)) {
      throw Error(errc::usage_error, "--tol must lie in (0,1)");
    }
    if (!(opt.target_reduction > 0.0 && opt.target_reduction < 1.0)) {
      throw Error(errc::usage_error, "--target-reduction must lie in (0,1)");
    }
    if (opt.max_iters < 1) {
      throw Error(errc::usage_error, "--max-iters must be at least 1");
    }
    if (poisson->parsed() && opt.poisson_n < 1) {
      throw Error(errc::usage_error, "--n must be at least 1");
    }
    if (certify->parsed()) return run_certify(opt);
    if (spectrum->parsed()) return run_spectrum(opt);
    if (solve->parsed()) return run_solve(opt);
    if (poisson->parsed()) return run_poisson(opt);
    throw Error(errc::usage_error, "no command selected");
  } catch (const Error& e) {
    std::cerr << itercert::error_label(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << "\n";
    return 3;
  }
}
