#pragma once

#include <optional>
#include <string>

#include "itercert/dense.hpp"

namespace itercert {

// Result of loading a Matrix Market file. real_values is present when the
// source field was real (or every imaginary part is zero), so callers that
// need a real matrix can ask for one.
struct LoadedMatrix {
  DenseMatrix values = DenseMatrix(1, 1);
  std::optional<RealMatrix> real_values;
};

// Array and coordinate formats, real and complex fields; symmetric (and for
// complex files hermitian) storage is expanded to the full matrix.
// Malformed input raises E_IO with the offending line number.
LoadedMatrix load_matrix_market(const std::string& path);

// Column vector from an n-by-1 (or 1-by-n) matrix file.
DenseVector load_vector_matrix_market(const std::string& path);

// Writers emit the array layout with 17 significant digits, which
// round-trips doubles within 1e-15 relative.
void save_matrix_market(const std::string& path, const RealMatrix& a);
void save_matrix_market(const std::string& path, const DenseMatrix& a);
void save_matrix_market(const std::string& path, const RealVector& v);
void save_matrix_market(const std::string& path, const DenseVector& v);

}  // namespace itercert
