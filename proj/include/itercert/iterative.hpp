#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "itercert/dense.hpp"

namespace itercert {

// Geometric-mean window for the observed convergence rate, and the cap on
// stored iterates (norm histories are always kept in full).
inline constexpr std::size_t rate_window = 20;
inline constexpr std::size_t trace_vector_cap = 10000;

enum class SplittingKind { jacobi, gauss_seidel, custom };

// A = a1 + a2 with a1 easily invertible; the splittings are entry selections,
// so the reconstruction is exact. Custom splittings carry the LU factors of
// a1, computed eagerly to verify invertibility.
struct Splitting {
  DenseMatrix a1;
  DenseMatrix a2;
  SplittingKind kind;
  std::size_t source_dim;
  std::optional<LuFactorization> a1_lu;  // present for custom splittings
};

// a1 = diag(A), a2 = A - diag(A). Every diagonal entry must clear the
// relative pivot threshold.
Splitting jacobi_splitting(const DenseMatrix& a);

// a1 = lower triangle including the diagonal, a2 = strict upper triangle.
Splitting gauss_seidel_splitting(const DenseMatrix& a);

// Caller-chosen a1 + a2; invertibility of a1 is verified by LU.
Splitting custom_splitting(const DenseMatrix& a1, const DenseMatrix& a2);

// S = -a1^{-1} a2, solved columnwise from a1 * S = -a2 (triangular solves for
// Jacobi/Gauss-Seidel, the cached LU for custom); a1 is never inverted.
DenseMatrix iteration_matrix(const Splitting& s);

struct IterateOptions {
  std::size_t max_iters = 100000;
  double tol = 1e-10;
  // <= 0 selects the default 1e12 * (1 + ||b||).
  double divergence_threshold = 0.0;
};

enum class IterationStatus { reached_tol, max_iters, diverged };

struct IterationTrace {
  std::vector<DenseVector> iterates;  // x0.. up to trace_vector_cap entries
  DenseVector final = DenseVector(1);
  std::vector<double> update_norms;          // ||x_m - x_{m-1}||, m = 1..M
  std::vector<double> error_norms;           // ||x_m - x_ref||, m = 0..M (with x_ref)
  IterationStatus status = IterationStatus::max_iters;
  std::size_t iterations = 0;                // M
};

// Fixed-point iteration: solve a1 * x_m = b - a2 * x_{m-1} until the relative
// update norm reaches tol, the iteration budget runs out, or an update norm
// exceeds the divergence threshold.
IterationTrace iterate(const Splitting& s, const DenseVector& b,
                       const DenseVector& x0, const IterateOptions& opts = {},
                       const DenseVector* x_ref = nullptr);

// Geometric mean of successive error-norm ratios over the trailing
// rate_window steps; needs rate_window+1 trailing error norms above eps_zero.
double observed_rate(const IterationTrace& trace);

}  // namespace itercert
