#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "itercert/complex.hpp"
#include "itercert/errors.hpp"

namespace itercert {

// Stopping tolerance (relative Rayleigh-quotient change) and iteration cap
// for the power iteration behind the induced 2-norm.
inline constexpr double tol_norm = 1e-12;
inline constexpr int max_iters_norm = 10000;
// Pivot cutoff, relative to the largest entry modulus of the factored matrix.
inline constexpr double eps_pivot_rel = 1e-13;
// Residual acceptance for direct solves: ||Ax-b|| <= tol_residual*(||A||_F*||x||+||b||).
inline constexpr double tol_residual = 1e-10;

// Row-major dense complex matrix, at least 1x1.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw Error(errc::domain_error, "matrix dimensions must be at least 1");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = {1.0, 0.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  ComplexScalar& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  ComplexScalar operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  const std::vector<ComplexScalar>& data() const { return data_; }
  std::vector<ComplexScalar>& data() { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ComplexScalar> data_;
};

// Dense complex column vector, at least dimension 1.
class DenseVector {
 public:
  explicit DenseVector(std::size_t dim) : data_(dim) {
    if (dim == 0) {
      throw Error(errc::domain_error, "vector dimension must be at least 1");
    }
  }

  std::size_t dim() const { return data_.size(); }

  ComplexScalar& operator[](std::size_t i) {
    assert(i < data_.size());
    return data_[i];
  }
  ComplexScalar operator[](std::size_t i) const {
    assert(i < data_.size());
    return data_[i];
  }

  const std::vector<ComplexScalar>& data() const { return data_; }

 private:
  std::vector<ComplexScalar> data_;
};

// Real-valued counterparts; real systems are embedded into the complex types
// entrywise when the spectral machinery needs them.
struct RealMatrix {
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {
    if (r == 0 || c == 0) {
      throw Error(errc::domain_error, "matrix dimensions must be at least 1");
    }
  }
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::size_t rows;
  std::size_t cols;
  std::vector<double> data;
};

struct RealVector {
  explicit RealVector(std::size_t n) : data(n) {
    if (n == 0) {
      throw Error(errc::domain_error, "vector dimension must be at least 1");
    }
  }
  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }
  std::size_t dim() const { return data.size(); }
  std::vector<double> data;
};

// Entrywise embedding a -> (a, 0).
DenseMatrix embed_real(const RealMatrix& a);
DenseVector embed_real(const RealVector& v);

// (A^H)_{ij} = conj(A_{ji}).
DenseMatrix conjugate_transpose(const DenseMatrix& a);

// Products and linear combinations; summation order is fixed left-to-right.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseVector matvec(const DenseMatrix& a, const DenseVector& v);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a);
DenseMatrix operator*(ComplexScalar s, const DenseMatrix& a);
inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  return matmul(a, b);
}
inline DenseVector operator*(const DenseMatrix& a, const DenseVector& v) {
  return matvec(a, v);
}

DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a);
DenseVector operator*(ComplexScalar s, const DenseVector& v);

// Cartesian basis vector e_j.
DenseVector unit_vector(std::size_t n, std::size_t j);

// L2 norm sqrt(sum |v_j|^2).
double vec_norm2(const DenseVector& v);

// sqrt(sum_ij |A_ij|^2); upper bound for the induced 2-norm.
double frobenius_norm(const DenseMatrix& a);

// Induced 2-norm sqrt(lambda_max(A^H A)), via power iteration on the
// Hermitian PSD matrix A^H A from a deterministic start.
double induced_2norm(const DenseMatrix& a);

// LU with partial pivoting. L is unit lower triangular, stored with U in a
// single matrix; perm records the row exchanges.
struct LuFactorization {
  DenseMatrix lu;
  std::vector<std::size_t> perm;
};

LuFactorization lu_factor(const DenseMatrix& a);
DenseVector lu_solve(const LuFactorization& f, const DenseVector& b);
DenseVector lu_solve(const DenseMatrix& a, const DenseVector& b);

enum class TriangularShape { lower, upper };

// Forward/back substitution; the matrix is trusted to have the declared shape.
DenseVector triangular_solve(const DenseMatrix& m, const DenseVector& b,
                             TriangularShape shape);

}  // namespace itercert
