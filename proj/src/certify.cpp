#include "itercert/certify.hpp"

#include <cmath>
#include <string>

namespace itercert {

namespace {

void require_target(double target_reduction) {
  if (!(target_reduction > 0.0 && target_reduction < 1.0)) {
    throw Error(errc::domain_error, "target reduction must lie in (0,1)");
  }
}

void fill_predictions(ConvergenceCertificate& cert, double target_reduction) {
  cert.predicted_rate = cert.spectral_radius;
  if (cert.spectral_radius > 0.0 && cert.spectral_radius < 1.0 - cert_margin) {
    cert.predicted_iters = static_cast<unsigned long>(
        std::ceil(std::log(target_reduction) / std::log(cert.spectral_radius)));
  } else {
    cert.predicted_iters = 0;
    if (cert.spectral_radius == 0.0) {
      if (!cert.notes.empty()) cert.notes += "; ";
      cert.notes += "zero spectral radius: converges within n steps";
    }
  }
}

// Attempt L L^H = H - tau*I; success certifies every eigenvalue of H > tau.
bool cholesky_succeeds(const DenseMatrix& h, double tau) {
  const std::size_t n = h.rows();
  DenseMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j).re - tau;
    for (std::size_t k = 0; k < j; ++k) {
      const double m = cmod(l(j, k));
      d -= m * m;
    }
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = {ljj, 0.0};
    for (std::size_t i = j + 1; i < n; ++i) {
      ComplexScalar acc = h(i, j);
      for (std::size_t k = 0; k < j; ++k) acc = acc - l(i, k) * conj(l(j, k));
      l(i, j) = (1.0 / ljj) * acc;
    }
  }
  return true;
}

}  // namespace

ConvergenceCertificate classify_spectrum(const Spectrum& spec,
                                         double target_reduction) {
  require_target(target_reduction);
  ConvergenceCertificate cert;
  cert.criterion = CertCriterion::spectral_radius;
  cert.eigenvalues = spec.eigenvalues;
  cert.spectral_radius = spectral_radius(spec);
  if (cert.spectral_radius < 1.0 - cert_margin) {
    cert.verdict = Verdict::converges;
  } else if (cert.spectral_radius > 1.0 + cert_margin) {
    cert.verdict = Verdict::diverges;
  } else {
    cert.verdict = Verdict::unknown;
    cert.notes = "spectral radius within the margin band around 1";
  }
  fill_predictions(cert, target_reduction);
  return cert;
}

ConvergenceCertificate certify_spectral(const Splitting& s,
                                        double target_reduction) {
  require_target(target_reduction);
  Spectrum spec;
  try {
    spec = eigenvalues_qr(iteration_matrix(s));
  } catch (const Error& e) {
    if (e.code() != errc::convergence_failure) throw;
    ConvergenceCertificate cert;
    cert.criterion = CertCriterion::spectral_radius;
    cert.verdict = Verdict::unknown;
    cert.notes = std::string("eigensolver failed: ") + e.what();
    return cert;
  }
  return classify_spectrum(spec, target_reduction);
}

bool is_positive_definite(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(errc::dimension_mismatch, "positive definiteness needs a square matrix");
  }
  const DenseMatrix h = ComplexScalar{0.5, 0.0} * (a + conjugate_transpose(a));
  const double tau = pd_tol * frobenius_norm(a);
  if (cholesky_succeeds(h, tau)) return true;
  // Near the tolerance boundary the factorization is inconclusive; decide by
  // the spectrum of the Hermitian part instead.
  Spectrum spec;
  try {
    spec = eigenvalues_qr(h);
  } catch (const Error&) {
    return false;
  }
  double min_re = spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.front().re;
  for (const ComplexScalar& l : spec.eigenvalues) min_re = std::min(min_re, l.re);
  return min_re > tau;
}

ConvergenceCertificate certify_reich(const RealMatrix& a,
                                     double target_reduction) {
  require_target(target_reduction);
  if (a.rows != a.cols) {
    throw Error(errc::dimension_mismatch, "Reich criterion needs a square matrix");
  }
  ConvergenceCertificate cert;
  cert.criterion = CertCriterion::reich;

  const DenseMatrix ac = embed_real(a);
  const double fro = frobenius_norm(ac);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = i + 1; j < a.cols; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > sym_tol * fro) {
        cert.verdict = Verdict::unknown;
        cert.notes = "premise failed: matrix is not symmetric";
        return cert;
      }
    }
  }
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (!(a(i, i) > 0.0)) {
      cert.verdict = Verdict::unknown;
      cert.notes = "premise failed: diagonal entry " + std::to_string(i) +
                   " is not positive";
      return cert;
    }
  }
  if (!is_positive_definite(ac)) {
    cert.verdict = Verdict::unknown;
    cert.notes = "premise failed: matrix is not positive definite";
    return cert;
  }

  cert.verdict = Verdict::converges;
  // Informational: the Gauss-Seidel spectrum behind the guarantee.
  try {
    const Spectrum spec = eigenvalues_qr(iteration_matrix(gauss_seidel_splitting(ac)));
    cert.eigenvalues = spec.eigenvalues;
    cert.spectral_radius = spectral_radius(spec);
  } catch (const Error& e) {
    cert.notes = std::string("rate unavailable, eigensolver failed: ") + e.what();
  }
  fill_predictions(cert, target_reduction);
  return cert;
}

}  // namespace itercert
