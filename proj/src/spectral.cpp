#include "itercert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "itercert/sequences.hpp"

namespace itercert {

namespace {

ComplexScalar csqrt(ComplexScalar w) {
  if (w.re == 0.0 && w.im == 0.0) return {0.0, 0.0};
  const double m = cmod(w);
  if (w.re >= 0.0) {
    const double u = std::sqrt(0.5 * (m + w.re));
    return {u, w.im / (2.0 * u)};
  }
  const double v = std::copysign(std::sqrt(0.5 * (m - w.re)), w.im);
  return {w.im / (2.0 * v), v};
}

// Eigenvalues of [[a,b],[c,d]] by the quadratic formula.
std::pair<ComplexScalar, ComplexScalar> eig2x2(ComplexScalar a, ComplexScalar b,
                                               ComplexScalar c, ComplexScalar d) {
  const ComplexScalar t = 0.5 * (a + d);
  const ComplexScalar det = a * d - b * c;
  const ComplexScalar disc = csqrt(t * t - det);
  return {t + disc, t - disc};
}

// Wilkinson shift: the eigenvalue of the trailing 2x2 closest to d.
ComplexScalar wilkinson_shift(ComplexScalar a, ComplexScalar b, ComplexScalar c,
                              ComplexScalar d) {
  auto [l1, l2] = eig2x2(a, b, c, d);
  return cmod(l1 - d) <= cmod(l2 - d) ? l1 : l2;
}

// Rotation [[cs, sn],[-conj(sn), cs]] with real cs mapping (a,b) to (r,0).
struct Givens {
  double cs = 1.0;
  ComplexScalar sn{0.0, 0.0};
};

Givens make_givens(ComplexScalar a, ComplexScalar b) {
  const double am = cmod(a);
  const double bm = cmod(b);
  if (bm == 0.0) return {};
  if (am == 0.0) return {0.0, {1.0, 0.0}};
  const double norm = std::hypot(am, bm);
  const ComplexScalar alpha = (1.0 / am) * a;  // a / |a|
  return {am / norm, (1.0 / norm) * (alpha * conj(b))};
}

// Reduce to upper Hessenberg form with complex Householder reflectors.
void hessenberg_reduce(DenseMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<ComplexScalar> u(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double col_norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = cmod(h(i, k));
      col_norm += m * m;
    }
    col_norm = std::sqrt(col_norm);
    if (col_norm == 0.0) continue;

    const ComplexScalar x0 = h(k + 1, k);
    const double x0m = cmod(x0);
    const ComplexScalar alpha =
        (x0m == 0.0) ? ComplexScalar{-col_norm, 0.0} : (-col_norm / x0m) * x0;

    double un = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      u[i] = h(i, k);
      if (i == k + 1) u[i] = u[i] - alpha;
      const double m = cmod(u[i]);
      un += m * m;
    }
    un = std::sqrt(un);
    if (un == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) u[i] = (1.0 / un) * u[i];

    // H <- (I - 2uu^H) H : rows k+1..n-1.
    for (std::size_t j = k; j < n; ++j) {
      ComplexScalar dot{0.0, 0.0};
      for (std::size_t i = k + 1; i < n; ++i) dot = dot + conj(u[i]) * h(i, j);
      dot = 2.0 * dot;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) = h(i, j) - u[i] * dot;
    }
    // H <- H (I - 2uu^H) : columns k+1..n-1.
    for (std::size_t i = 0; i < n; ++i) {
      ComplexScalar dot{0.0, 0.0};
      for (std::size_t j = k + 1; j < n; ++j) dot = dot + h(i, j) * u[j];
      dot = 2.0 * dot;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) = h(i, j) - dot * conj(u[j]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = {0.0, 0.0};
  }
}

bool spectrum_before(ComplexScalar z, ComplexScalar w) {
  const double mz = cmod(z), mw = cmod(w);
  if (mz != mw) return mz > mw;
  if (z.re != w.re) return z.re > w.re;
  return z.im > w.im;
}

}  // namespace

Spectrum eigenvalues_qr(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(errc::dimension_mismatch, "eigenvalues need a square matrix");
  }
  const std::size_t n = a.rows();
  if (n > 512) {
    throw Error(errc::domain_error, "eigensolver limited to n <= 512");
  }

  DenseMatrix h = a;
  hessenberg_reduce(h);
  const double scale = frobenius_norm(h);

  Spectrum spec;
  spec.method = SpectrumMethod::qr_iteration;
  spec.eigenvalues.reserve(n);
  double residual = 0.0;

  const long max_sweeps = static_cast<long>(max_qr_sweeps_per_dim) * static_cast<long>(n);
  long sweeps = 0;
  long stagnant = 0;

  auto subdiag_negligible = [&](std::size_t i) {
    // |h(i, i-1)| against its diagonal neighbors, with the overall scale as
    // the backstop when both neighbors vanish.
    double base = cmod(h(i - 1, i - 1)) + cmod(h(i, i));
    if (base == 0.0) base = scale;
    return cmod(h(i, i - 1)) <= qr_deflation_rel * base;
  };

  std::size_t hi = n;  // exclusive upper end of the active block
  while (hi > 0) {
    if (hi == 1) {
      spec.eigenvalues.push_back(h(0, 0));
      hi = 0;
      continue;
    }
    if (subdiag_negligible(hi - 1)) {
      residual = std::max(residual, cmod(h(hi - 1, hi - 2)));
      spec.eigenvalues.push_back(h(hi - 1, hi - 1));
      --hi;
      stagnant = 0;
      continue;
    }
    // Find the start of the trailing unreduced block; an interior split is a
    // deflation event as well.
    std::size_t lo = hi - 1;
    while (lo > 0 && !subdiag_negligible(lo)) --lo;
    if (lo > 0) residual = std::max(residual, cmod(h(lo, lo - 1)));
    if (hi - lo == 2) {
      // Trailing 2x2 block: closed form, no deflation error to record.
      auto [l1, l2] = eig2x2(h(lo, lo), h(lo, lo + 1), h(lo + 1, lo), h(lo + 1, lo + 1));
      spec.eigenvalues.push_back(l1);
      spec.eigenvalues.push_back(l2);
      hi = lo;
      stagnant = 0;
      continue;
    }

    if (++sweeps > max_sweeps) {
      throw Error(errc::convergence_failure,
                  "QR iteration exceeded the sweep budget before deflating");
    }
    ComplexScalar mu = wilkinson_shift(h(hi - 2, hi - 2), h(hi - 2, hi - 1),
                                       h(hi - 1, hi - 2), h(hi - 1, hi - 1));
    if (++stagnant % 12 == 0) {
      // Exceptional shift to break rare shift cycles.
      mu = h(hi - 1, hi - 1) + ComplexScalar{0.75 * cmod(h(hi - 1, hi - 2)), 0.0};
    }

    // Explicit shifted QR step on the active block [lo, hi).
    for (std::size_t i = lo; i < hi; ++i) h(i, i) = h(i, i) - mu;
    std::vector<Givens> rot(hi - lo - 1);
    for (std::size_t k = lo; k + 1 < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k - lo] = g;
      for (std::size_t j = k; j < hi; ++j) {
        const ComplexScalar t1 = h(k, j);
        const ComplexScalar t2 = h(k + 1, j);
        h(k, j) = g.cs * t1 + g.sn * t2;
        h(k + 1, j) = g.cs * t2 - conj(g.sn) * t1;
      }
      h(k + 1, k) = {0.0, 0.0};
    }
    for (std::size_t k = lo; k + 1 < hi; ++k) {
      const Givens g = rot[k - lo];
      const std::size_t rows_end = std::min(k + 2, hi);
      for (std::size_t i = lo; i < rows_end; ++i) {
        const ComplexScalar t1 = h(i, k);
        const ComplexScalar t2 = h(i, k + 1);
        h(i, k) = g.cs * t1 + conj(g.sn) * t2;
        h(i, k + 1) = g.cs * t2 - g.sn * t1;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) h(i, i) = h(i, i) + mu;
  }

  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), spectrum_before);
  spec.residual_estimate = residual;
  return spec;
}

double spectral_radius(const Spectrum& spec) {
  double rho = 0.0;
  for (const ComplexScalar& l : spec.eigenvalues) rho = std::max(rho, cmod(l));
  return rho;
}

Spectrum tridiag_toeplitz_eigenvalues(double a, double b, double c,
                                      std::size_t n) {
  if (n == 0) {
    throw Error(errc::domain_error, "tridiagonal spectrum needs n >= 1");
  }
  if (a * c < 0.0) {
    throw Error(errc::negative_product,
                "tridiagonal closed form needs a*c >= 0");
  }
  const double s = 2.0 * std::sqrt(a * c);
  Spectrum spec;
  spec.method = SpectrumMethod::tridiag_closed_form;
  spec.eigenvalues.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) {
    const double angle = static_cast<double>(m) * std::numbers::pi /
                         static_cast<double>(n + 1);
    spec.eigenvalues.push_back({b + s * std::cos(angle), 0.0});
  }
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), spectrum_before);
  return spec;
}

double multiset_distance(const std::vector<ComplexScalar>& a,
                         const std::vector<ComplexScalar>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pairs.emplace_back(cmod(a[i] - b[j]), i, j);
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
  std::vector<bool> used_a(n, false), used_b(n, false);
  std::size_t matched = 0;
  double dist = 0.0;
  for (const auto& [d, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    dist = std::max(dist, d);
    if (++matched == n) break;
  }
  return dist;
}

DenseMatrix jordan_block_power(const JordanBlockSpec& block, unsigned long m) {
  if (block.size == 0) {
    throw Error(errc::domain_error, "Jordan block needs size >= 1");
  }
  const std::size_t k = block.size;
  DenseMatrix out(k, k);

  if (m + 1 < k) {
    // Below the closed-form regime: power up by repeated multiplication.
    DenseMatrix j(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      j(i, i) = block.eigenvalue;
      if (i + 1 < k) j(i, i + 1) = {1.0, 0.0};
    }
    DenseMatrix acc = DenseMatrix::identity(k);
    for (unsigned long p = 0; p < m; ++p) acc = matmul(acc, j);
    return acc;
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const unsigned long off = j - i;
      out(i, j) = binom_float(m, off) * cpow(block.eigenvalue, m - off);
    }
  }
  return out;
}

double jordan_entry_bound(ComplexScalar lambda, unsigned long k_offset,
                          unsigned long m) {
  if (m < k_offset) {
    throw Error(errc::domain_error, "entry bound needs m >= k");
  }
  double poly = 1.0;  // m^k / k!
  for (unsigned long i = 1; i <= k_offset; ++i) {
    poly *= static_cast<double>(m) / static_cast<double>(i);
  }
  return poly * std::pow(cmod(lambda), static_cast<double>(m - k_offset));
}

double predict_decay(const std::vector<JordanBlockSpec>& blocks,
                     unsigned long m) {
  double acc = 0.0;
  for (const JordanBlockSpec& block : blocks) {
    for (std::size_t off = 0; off < block.size; ++off) {
      // Offsets beyond m correspond to exactly-zero entries of J^m.
      if (off > m) continue;
      const double bound = jordan_entry_bound(block.eigenvalue, off, m);
      const double copies = static_cast<double>(block.size - off);
      acc += copies * bound * bound;
    }
  }
  return std::sqrt(acc);
}

}  // namespace itercert
