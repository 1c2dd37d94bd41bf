#include "itercert/iterative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace itercert {

namespace {

double diagonal_floor(const DenseMatrix& a) {
  double max_mod = 0.0;
  for (const ComplexScalar& z : a.data()) max_mod = std::max(max_mod, cmod(z));
  return eps_pivot_rel * max_mod;
}

void require_nonzero_diagonal(const DenseMatrix& a) {
  const double floor = diagonal_floor(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (cmod(a(i, i)) <= floor) {
      throw Error(errc::zero_diagonal,
                  "zero diagonal entry at index " + std::to_string(i));
    }
  }
}

DenseVector solve_a1(const Splitting& s, const DenseVector& rhs) {
  switch (s.kind) {
    case SplittingKind::jacobi:
    case SplittingKind::gauss_seidel:
      return triangular_solve(s.a1, rhs, TriangularShape::lower);
    case SplittingKind::custom:
      return lu_solve(*s.a1_lu, rhs);
  }
  throw Error(errc::domain_error, "unknown splitting kind");
}

}  // namespace

Splitting jacobi_splitting(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(errc::dimension_mismatch, "splitting needs a square matrix");
  }
  require_nonzero_diagonal(a);
  const std::size_t n = a.rows();
  DenseMatrix a1(n, n), a2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      (i == j ? a1 : a2)(i, j) = a(i, j);
    }
  }
  return {std::move(a1), std::move(a2), SplittingKind::jacobi, n, std::nullopt};
}

Splitting gauss_seidel_splitting(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(errc::dimension_mismatch, "splitting needs a square matrix");
  }
  require_nonzero_diagonal(a);
  const std::size_t n = a.rows();
  DenseMatrix a1(n, n), a2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      (i >= j ? a1 : a2)(i, j) = a(i, j);
    }
  }
  return {std::move(a1), std::move(a2), SplittingKind::gauss_seidel, n,
          std::nullopt};
}

Splitting custom_splitting(const DenseMatrix& a1, const DenseMatrix& a2) {
  if (!a1.square() || a1.rows() != a2.rows() || a1.cols() != a2.cols()) {
    throw Error(errc::dimension_mismatch, "splitting parts must be square and equal");
  }
  LuFactorization lu = lu_factor(a1);  // throws SingularMatrix when not invertible
  return {a1, a2, SplittingKind::custom, a1.rows(), std::move(lu)};
}

DenseMatrix iteration_matrix(const Splitting& s) {
  const std::size_t n = s.source_dim;
  DenseMatrix result(n, n);
  DenseVector rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -s.a2(i, j);
    const DenseVector col = solve_a1(s, rhs);
    for (std::size_t i = 0; i < n; ++i) result(i, j) = col[i];
  }
  return result;
}

IterationTrace iterate(const Splitting& s, const DenseVector& b,
                       const DenseVector& x0, const IterateOptions& opts,
                       const DenseVector* x_ref) {
  const std::size_t n = s.source_dim;
  if (b.dim() != n || x0.dim() != n || (x_ref != nullptr && x_ref->dim() != n)) {
    throw Error(errc::dimension_mismatch, "iteration operands disagree in dimension");
  }
  const double divergence_threshold =
      opts.divergence_threshold > 0.0 ? opts.divergence_threshold
                                      : 1e12 * (1.0 + vec_norm2(b));

  IterationTrace trace{{}, x0, {}, {}, IterationStatus::max_iters, 0};
  trace.iterates.push_back(x0);
  if (x_ref != nullptr) trace.error_norms.push_back(vec_norm2(x0 - *x_ref));

  DenseVector x_prev = x0;
  for (std::size_t m = 1; m <= opts.max_iters; ++m) {
    const DenseVector x = solve_a1(s, b - matvec(s.a2, x_prev));
    const double update = vec_norm2(x - x_prev);
    trace.update_norms.push_back(update);
    if (x_ref != nullptr) trace.error_norms.push_back(vec_norm2(x - *x_ref));
    if (trace.iterates.size() < trace_vector_cap) trace.iterates.push_back(x);
    trace.final = x;
    trace.iterations = m;
    if (update > divergence_threshold) {
      trace.status = IterationStatus::diverged;
      break;
    }
    if (update <= opts.tol * (1.0 + vec_norm2(x))) {
      trace.status = IterationStatus::reached_tol;
      break;
    }
    x_prev = x;
  }
  return trace;
}

double observed_rate(const IterationTrace& trace) {
  const std::vector<double>& e = trace.error_norms;
  if (e.size() < rate_window + 1) {
    throw Error(errc::insufficient_data,
                "observed rate needs " + std::to_string(rate_window + 1) +
                    " error norms");
  }
  for (std::size_t i = e.size() - rate_window - 1; i < e.size(); ++i) {
    if (!(e[i] > eps_zero)) {
      throw Error(errc::insufficient_data,
                  "error norms in the rate window are numerically zero");
    }
  }
  // Geometric mean of the window ratios telescopes to a single power.
  const double last = e.back();
  const double first = e[e.size() - rate_window - 1];
  return std::pow(last / first, 1.0 / static_cast<double>(rate_window));
}

}  // namespace itercert
