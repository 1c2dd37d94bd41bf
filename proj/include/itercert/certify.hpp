#pragma once

#include <string>
#include <vector>

#include "itercert/iterative.hpp"
#include "itercert/spectral.hpp"

namespace itercert {

// A numerically computed spectral radius within cert_margin of 1 cannot
// honestly support a verdict; the exact trichotomy becomes three-valued.
inline constexpr double cert_margin = 1e-8;
// Slack for the exact-arithmetic premises of Reich's condition.
inline constexpr double pd_tol = 1e-12;
inline constexpr double sym_tol = 1e-12;

enum class Verdict { converges, diverges, unknown };
enum class CertCriterion { spectral_radius, reich };

struct ConvergenceCertificate {
  Verdict verdict = Verdict::unknown;
  CertCriterion criterion = CertCriterion::spectral_radius;
  double spectral_radius = 0.0;
  std::vector<ComplexScalar> eigenvalues;
  double predicted_rate = 0.0;
  unsigned long predicted_iters = 0;  // for the caller-supplied target reduction
  std::string notes;
};

// Margin-rule classification of an already-computed iteration-matrix
// spectrum, with rate/iteration predictions for the target reduction.
ConvergenceCertificate classify_spectrum(const Spectrum& spec,
                                         double target_reduction);

// Full spectral certificate: S = iteration_matrix(s), its QR spectrum, and
// the margin-rule verdict. An eigensolver failure yields Unknown with a note.
ConvergenceCertificate certify_spectral(const Splitting& s,
                                        double target_reduction);

// Re(x^H A x) > 0 for all nonzero x, decided through the Hermitian part
// H = (A + A^H)/2: a Cholesky attempt on H - tau*I with tau = pd_tol*||A||_F,
// falling back to the QR spectrum of H when the factorization fails.
bool is_positive_definite(const DenseMatrix& a);

// Reich's sufficient condition for Gauss-Seidel: symmetry, positive diagonal,
// and positive definiteness. All premises hold -> Converges (with the GS
// spectrum attached as information); any failure -> Unknown, never Diverges.
ConvergenceCertificate certify_reich(const RealMatrix& a,
                                     double target_reduction);

}  // namespace itercert
