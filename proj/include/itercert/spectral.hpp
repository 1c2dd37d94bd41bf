#pragma once

#include <cstddef>
#include <vector>

#include "itercert/dense.hpp"

namespace itercert {

// Subdiagonal deflation threshold, relative to the neighboring diagonal
// moduli, and the total sweep budget factor (max sweeps = 100 * n).
inline constexpr double qr_deflation_rel = 1e-14;
inline constexpr int max_qr_sweeps_per_dim = 100;

enum class SpectrumMethod { qr_iteration, tridiag_closed_form, provided };

// Eigenvalues with multiplicity, in canonical order: descending modulus,
// ties broken by descending real part, then descending imaginary part.
struct Spectrum {
  std::vector<ComplexScalar> eigenvalues;
  SpectrumMethod method = SpectrumMethod::provided;
  double residual_estimate = 0.0;
};

// Dense eigenvalues: Hessenberg reduction followed by shifted QR iteration
// with deflation. residual_estimate reports the largest subdiagonal magnitude
// zeroed at a deflation.
Spectrum eigenvalues_qr(const DenseMatrix& a);

// max_i |lambda_i|.
double spectral_radius(const Spectrum& spec);

// Closed-form spectrum {b + 2*sqrt(a*c)*cos(m*pi/(n+1)) : m = 1..n} of the
// tridiagonal Toeplitz matrix with a below, b on, c above the diagonal.
// Requires a*c >= 0.
Spectrum tridiag_toeplitz_eigenvalues(double a, double b, double c,
                                      std::size_t n);

// Greedy nearest-pair multiset distance between two eigenvalue lists
// (infinity when the lengths differ). Adequate for well-separated spectra.
double multiset_distance(const std::vector<ComplexScalar>& a,
                         const std::vector<ComplexScalar>& b);

struct JordanBlockSpec {
  ComplexScalar eigenvalue;
  std::size_t size = 1;
};

// m-th power of the Jordan block: entry (i,j) = C(m, j-i) * lambda^(m-(j-i))
// for j >= i. The closed form covers m >= size-1; smaller m fall back to
// repeated multiplication.
DenseMatrix jordan_block_power(const JordanBlockSpec& block, unsigned long m);

// (m^k / k!) * |lambda|^(m-k): upper bound on the modulus of the Jordan power
// entry at superdiagonal offset k, via C(m,k) <= m^k/k!. Requires m >= k.
double jordan_entry_bound(ComplexScalar lambda, unsigned long k_offset,
                          unsigned long m);

// Frobenius-style aggregate of the entry bounds over all blocks; an upper
// bound for ||J^m||_2 that tends to zero when every |lambda| < 1.
double predict_decay(const std::vector<JordanBlockSpec>& blocks,
                     unsigned long m);

}  // namespace itercert
