#include "itercert/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace itercert {

namespace {

[[noreturn]] void io_fail(const std::string& path, std::size_t line,
                          const std::string& message) {
  throw Error(errc::io_error,
              path + ": line " + std::to_string(line) + ": " + message);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Header {
  bool array = false;        // array vs coordinate
  bool complex_field = false;
  enum class Symmetry { general, symmetric, hermitian } symmetry = Symmetry::general;
};

class LineReader {
 public:
  LineReader(std::istream& in, const std::string& path, std::size_t consumed)
      : in_(in), path_(path), line_no_(consumed) {}

  // Next line that is neither blank nor a comment.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto pos = line.find_first_not_of(" \t");
      if (pos == std::string::npos) continue;
      if (line[pos] == '%') continue;
      return true;
    }
    return false;
  }

  std::size_t line_no() const { return line_no_; }
  const std::string& path() const { return path_; }

 private:
  std::istream& in_;
  std::string path_;
  std::size_t line_no_ = 0;
};

Header parse_header(std::istream& in, const std::string& path,
                    std::size_t& line_no) {
  std::string line;
  if (!std::getline(in, line)) io_fail(path, 1, "empty file");
  line_no = 1;
  std::istringstream ss(line);
  std::string banner, object, format, field, symmetry;
  ss >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") io_fail(path, 1, "missing %%MatrixMarket banner");
  if (lowercase(object) != "matrix") io_fail(path, 1, "only 'matrix' objects are supported");

  Header h;
  const std::string fmt = lowercase(format);
  if (fmt == "array") {
    h.array = true;
  } else if (fmt == "coordinate") {
    h.array = false;
  } else {
    io_fail(path, 1, "unsupported format '" + format + "'");
  }
  const std::string fld = lowercase(field);
  if (fld == "real") {
    h.complex_field = false;
  } else if (fld == "complex") {
    h.complex_field = true;
  } else {
    io_fail(path, 1, "unsupported field '" + field + "'");
  }
  const std::string sym = lowercase(symmetry);
  if (sym == "general") {
    h.symmetry = Header::Symmetry::general;
  } else if (sym == "symmetric") {
    h.symmetry = Header::Symmetry::symmetric;
  } else if (sym == "hermitian" && h.complex_field) {
    h.symmetry = Header::Symmetry::hermitian;
  } else {
    io_fail(path, 1, "unsupported symmetry '" + symmetry + "'");
  }
  return h;
}

double parse_double(const std::string& token, LineReader& reader) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    io_fail(reader.path(), reader.line_no(), "bad numeric token '" + token + "'");
  }
}

void mirror(DenseMatrix& m, std::size_t i, std::size_t j, ComplexScalar v,
            Header::Symmetry sym) {
  m(i, j) = v;
  if (i != j && sym != Header::Symmetry::general) {
    m(j, i) = sym == Header::Symmetry::hermitian ? conj(v) : v;
  }
}

}  // namespace

LoadedMatrix load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::io_error, path + ": cannot open file");
  }
  std::size_t header_line = 0;
  const Header h = parse_header(in, path, header_line);
  LineReader reader(in, path, header_line);

  std::string line;
  if (!reader.next(line)) io_fail(path, reader.line_no() + 1, "missing size line");
  std::istringstream size_ss(line);
  long rows = 0, cols = 0, entries = 0;
  if (h.array) {
    if (!(size_ss >> rows >> cols)) io_fail(path, reader.line_no(), "bad array size line");
  } else {
    if (!(size_ss >> rows >> cols >> entries)) {
      io_fail(path, reader.line_no(), "bad coordinate size line");
    }
  }
  if (rows < 1 || cols < 1 || entries < 0) {
    io_fail(path, reader.line_no(), "matrix dimensions must be positive");
  }
  if (h.symmetry != Header::Symmetry::general && rows != cols) {
    io_fail(path, reader.line_no(), "symmetric storage needs a square matrix");
  }

  DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));

  auto read_value = [&](std::istringstream& ss) -> ComplexScalar {
    std::string tok_re, tok_im;
    if (!(ss >> tok_re)) io_fail(path, reader.line_no(), "missing value");
    const double re = parse_double(tok_re, reader);
    if (!h.complex_field) return {re, 0.0};
    if (!(ss >> tok_im)) io_fail(path, reader.line_no(), "missing imaginary part");
    return {re, parse_double(tok_im, reader)};
  };

  if (h.array) {
    // Array layout is column-major; symmetric storage carries the lower
    // triangle of each column.
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) {
      const std::size_t i0 = h.symmetry == Header::Symmetry::general ? 0 : j;
      for (std::size_t i = i0; i < static_cast<std::size_t>(rows); ++i) {
        if (!reader.next(line)) {
          io_fail(path, reader.line_no() + 1, "file ends before all entries are read");
        }
        std::istringstream ss(line);
        mirror(m, i, j, read_value(ss), h.symmetry);
        std::string extra;
        if (ss >> extra) io_fail(path, reader.line_no(), "trailing tokens on value line");
      }
    }
  } else {
    for (long e = 0; e < entries; ++e) {
      if (!reader.next(line)) {
        io_fail(path, reader.line_no() + 1, "file ends before all entries are read");
      }
      std::istringstream ss(line);
      long i1 = 0, j1 = 0;
      if (!(ss >> i1 >> j1)) io_fail(path, reader.line_no(), "bad coordinate indices");
      if (i1 < 1 || i1 > rows || j1 < 1 || j1 > cols) {
        io_fail(path, reader.line_no(), "coordinate indices out of range");
      }
      mirror(m, static_cast<std::size_t>(i1 - 1), static_cast<std::size_t>(j1 - 1),
             read_value(ss), h.symmetry);
    }
  }
  if (reader.next(line)) io_fail(path, reader.line_no(), "unexpected trailing content");

  LoadedMatrix out{std::move(m), std::nullopt};
  const bool all_real =
      std::all_of(out.values.data().begin(), out.values.data().end(),
                  [](ComplexScalar z) { return z.im == 0.0; });
  if (all_real) {
    RealMatrix r(out.values.rows(), out.values.cols());
    for (std::size_t i = 0; i < r.rows; ++i)
      for (std::size_t j = 0; j < r.cols; ++j) r(i, j) = out.values(i, j).re;
    out.real_values = std::move(r);
  }
  return out;
}

DenseVector load_vector_matrix_market(const std::string& path) {
  const LoadedMatrix lm = load_matrix_market(path);
  const DenseMatrix& m = lm.values;
  if (m.cols() == 1) {
    DenseVector v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, 0);
    return v;
  }
  if (m.rows() == 1) {
    DenseVector v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(0, j);
    return v;
  }
  throw Error(errc::io_error, path + ": expected a vector (one row or one column)");
}

namespace {

void write_header(std::ofstream& out, const std::string& path, bool complex_field) {
  if (!out) {
    throw Error(errc::io_error, path + ": cannot open file for writing");
  }
  out << "%%MatrixMarket matrix array "
      << (complex_field ? "complex" : "real") << " general\n";
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_matrix_market(const std::string& path, const RealMatrix& a) {
  std::ofstream out(path);
  write_header(out, path, false);
  out << a.rows << " " << a.cols << "\n";
  for (std::size_t j = 0; j < a.cols; ++j)
    for (std::size_t i = 0; i < a.rows; ++i) out << fmt17(a(i, j)) << "\n";
  if (!out) throw Error(errc::io_error, path + ": write failed");
}

void save_matrix_market(const std::string& path, const DenseMatrix& a) {
  std::ofstream out(path);
  write_header(out, path, true);
  out << a.rows() << " " << a.cols() << "\n";
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      out << fmt17(a(i, j).re) << " " << fmt17(a(i, j).im) << "\n";
  if (!out) throw Error(errc::io_error, path + ": write failed");
}

void save_matrix_market(const std::string& path, const RealVector& v) {
  RealMatrix m(v.dim(), 1);
  for (std::size_t i = 0; i < v.dim(); ++i) m(i, 0) = v[i];
  save_matrix_market(path, m);
}

void save_matrix_market(const std::string& path, const DenseVector& v) {
  DenseMatrix m(v.dim(), 1);
  for (std::size_t i = 0; i < v.dim(); ++i) m(i, 0) = v[i];
  save_matrix_market(path, m);
}

}  // namespace itercert
