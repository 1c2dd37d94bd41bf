#include "itercert/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace itercert {

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(errc::dimension_mismatch, "matrix shapes differ");
  }
}

double max_entry_modulus(const DenseMatrix& a) {
  double m = 0.0;
  for (const ComplexScalar& z : a.data()) m = std::max(m, cmod(z));
  return m;
}

}  // namespace

DenseMatrix embed_real(const RealMatrix& a) {
  DenseMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out(i, j) = {a(i, j), 0.0};
  return out;
}

DenseVector embed_real(const RealVector& v) {
  DenseVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = {v[i], 0.0};
  return out;
}

DenseMatrix conjugate_transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(errc::dimension_mismatch, "inner dimensions disagree");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ComplexScalar acc{0.0, 0.0};
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

DenseVector matvec(const DenseMatrix& a, const DenseVector& v) {
  if (a.cols() != v.dim()) {
    throw Error(errc::dimension_mismatch, "matrix-vector dimensions disagree");
  }
  DenseVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ComplexScalar acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = a.data()[i] + b.data()[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = a.data()[i] - b.data()[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a) {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = -a.data()[i];
  return out;
}

DenseMatrix operator*(ComplexScalar s, const DenseMatrix& a) {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = s * a.data()[i];
  return out;
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(errc::dimension_mismatch, "vector dimensions disagree");
  }
  DenseVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(errc::dimension_mismatch, "vector dimensions disagree");
  }
  DenseVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return out;
}

DenseVector operator-(const DenseVector& a) {
  DenseVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = -a[i];
  return out;
}

DenseVector operator*(ComplexScalar s, const DenseVector& v) {
  DenseVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return out;
}

DenseVector unit_vector(std::size_t n, std::size_t j) {
  if (j >= n) {
    throw Error(errc::index_out_of_range, "unit vector index out of range");
  }
  DenseVector e(n);
  e[j] = {1.0, 0.0};
  return e;
}

double vec_norm2(const DenseVector& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double m = cmod(v[i]);
    acc += m * m;
  }
  return std::sqrt(acc);
}

double frobenius_norm(const DenseMatrix& a) {
  double acc = 0.0;
  for (const ComplexScalar& z : a.data()) {
    const double m = cmod(z);
    acc += m * m;
  }
  return std::sqrt(acc);
}

double induced_2norm(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(errc::dimension_mismatch, "induced 2-norm needs a square matrix");
  }
  const std::size_t n = a.rows();
  const DenseMatrix gram = matmul(conjugate_transpose(a), a);
  if (frobenius_norm(gram) == 0.0) return 0.0;

  // Deterministic start: all-ones; if that lands in the kernel of A^H A,
  // fall back to a ramp, then to basis vectors (at least one survives since
  // the Gram matrix is nonzero).
  DenseVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = {1.0, 0.0};
  if (vec_norm2(matvec(gram, v)) == 0.0) {
    for (std::size_t i = 0; i < n; ++i) v[i] = {static_cast<double>(i + 1), 0.0};
    if (vec_norm2(matvec(gram, v)) == 0.0) {
      for (std::size_t j = 0; j < n; ++j) {
        v = unit_vector(n, j);
        if (vec_norm2(matvec(gram, v)) > 0.0) break;
      }
    }
  }
  {
    const double nv = vec_norm2(v);
    for (std::size_t i = 0; i < n; ++i) v[i] = (1.0 / nv) * v[i];
  }

  double rayleigh_prev = -1.0;
  for (int it = 0; it < max_iters_norm; ++it) {
    const DenseVector w = matvec(gram, v);
    // v^H w is real (up to roundoff) for the Hermitian Gram matrix.
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      rayleigh += v[i].re * w[i].re + v[i].im * w[i].im;
    if (it > 0 && std::abs(rayleigh - rayleigh_prev) <= tol_norm * std::abs(rayleigh)) {
      return std::sqrt(std::max(rayleigh, 0.0));
    }
    rayleigh_prev = rayleigh;
    const double nw = vec_norm2(w);
    if (nw == 0.0) return 0.0;  // iterate fell into the kernel: top eigenvalue 0
    for (std::size_t i = 0; i < n; ++i) v[i] = (1.0 / nw) * w[i];
  }
  throw Error(errc::convergence_failure,
              "power iteration for the induced 2-norm did not converge");
}

LuFactorization lu_factor(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(errc::dimension_mismatch, "LU needs a square matrix");
  }
  const std::size_t n = a.rows();
  LuFactorization f{a, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  const double pivot_floor = eps_pivot_rel * max_entry_modulus(a);

  DenseMatrix& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double piv_mod = cmod(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = cmod(lu(i, k));
      if (m > piv_mod) {
        piv_mod = m;
        piv = i;
      }
    }
    if (piv_mod <= pivot_floor) {
      throw Error(errc::singular_matrix,
                  "singular matrix: pivot " + std::to_string(k) + " below threshold");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const ComplexScalar m = lu(i, k) / lu(k, k);
      lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) = lu(i, j) - m * lu(k, j);
    }
  }
  return f;
}

DenseVector lu_solve(const LuFactorization& f, const DenseVector& b) {
  const std::size_t n = f.lu.rows();
  if (b.dim() != n) {
    throw Error(errc::dimension_mismatch, "right-hand side dimension disagrees");
  }
  DenseVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexScalar acc = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) acc = acc - f.lu(i, j) * y[j];
    y[i] = acc;
  }
  DenseVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    ComplexScalar acc = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc = acc - f.lu(ii, j) * x[j];
    x[ii] = acc / f.lu(ii, ii);
  }
  return x;
}

DenseVector lu_solve(const DenseMatrix& a, const DenseVector& b) {
  return lu_solve(lu_factor(a), b);
}

DenseVector triangular_solve(const DenseMatrix& m, const DenseVector& b,
                             TriangularShape shape) {
  if (!m.square()) {
    throw Error(errc::dimension_mismatch, "triangular solve needs a square matrix");
  }
  const std::size_t n = m.rows();
  if (b.dim() != n) {
    throw Error(errc::dimension_mismatch, "right-hand side dimension disagrees");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cmod(m(i, i)) == 0.0) {
      throw Error(errc::singular_matrix,
                  "zero diagonal at row " + std::to_string(i) + " in triangular solve");
    }
  }
  DenseVector x(n);
  if (shape == TriangularShape::lower) {
    for (std::size_t i = 0; i < n; ++i) {
      ComplexScalar acc = b[i];
      for (std::size_t j = 0; j < i; ++j) acc = acc - m(i, j) * x[j];
      x[i] = acc / m(i, i);
    }
  } else {
    for (std::size_t ii = n; ii-- > 0;) {
      ComplexScalar acc = b[ii];
      for (std::size_t j = ii + 1; j < n; ++j) acc = acc - m(ii, j) * x[j];
      x[ii] = acc / m(ii, ii);
    }
  }
  return x;
}

}  // namespace itercert
