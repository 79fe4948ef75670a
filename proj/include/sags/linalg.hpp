#pragma once

// Dense exact linear algebra over a Field. Plain Gaussian elimination with
// first-nonzero pivoting; every routine is pure and deterministic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sags/gf.hpp"

namespace sags {

class Matrix {
 public:
  Matrix(Field field, size_t rows, size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, Fel{0}) {}

  static Matrix identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Fel& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  Fel at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  std::vector<Fel> row(size_t r) const {
    return std::vector<Fel>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }

  void set_row(size_t r, const std::vector<Fel>& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  Field field_;
  size_t rows_, cols_;
  std::vector<Fel> a_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch in matrix product");
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t l = 0; l < a.cols(); ++l) {
      Fel s = a.at(i, l);
      if (s == f.zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(s, b.at(l, j)));
    }
  return out;
}

inline std::vector<Fel> mat_vec(const Matrix& m, const std::vector<Fel>& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  const Field& f = m.field();
  std::vector<Fel> out(m.rows(), f.zero());
  for (size_t i = 0; i < m.rows(); ++i) {
    Fel s = f.zero();
    for (size_t j = 0; j < m.cols(); ++j) s = f.add(s, f.mul(m.at(i, j), x[j]));
    out[i] = s;
  }
  return out;
}

inline std::vector<Fel> vec_mat(const std::vector<Fel>& x, const Matrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("dimension mismatch in vector-matrix product");
  const Field& f = m.field();
  std::vector<Fel> out(m.cols(), f.zero());
  for (size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == f.zero()) continue;
    for (size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], m.at(i, j)));
  }
  return out;
}

inline Matrix submatrix_cols(const Matrix& m, const std::vector<size_t>& cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= m.cols()) throw std::invalid_argument("column index out of range");
    for (size_t i = 0; i < m.rows(); ++i) out.at(i, j) = m.at(i, cols[j]);
  }
  return out;
}

struct RrefResult {
  Matrix reduced;
  std::vector<size_t> pivots;
  size_t rank;
};

inline RrefResult rref(Matrix m) {
  const Field& f = m.field();
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    size_t sel = lead;
    while (sel < m.rows() && m.at(sel, col) == f.zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(lead, j));
    Fel piv_inv = f.inv(m.at(lead, col));
    for (size_t j = col; j < m.cols(); ++j) m.at(lead, j) = f.mul(piv_inv, m.at(lead, j));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == lead) continue;
      Fel factor = m.at(i, col);
      if (factor == f.zero()) continue;
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(lead, j)));
    }
    pivots.push_back(col);
    ++lead;
  }
  size_t rank = pivots.size();
  return RrefResult{std::move(m), std::move(pivots), rank};
}

inline size_t rank_of(const Matrix& m) { return rref(m).rank; }

// Rows of the result span the right kernel: m * k^T = 0 for each row k.
inline Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  Matrix out(f, m.cols() - r.rank, m.cols());
  size_t row = 0;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(row, free_col) = f.one();
    for (size_t pr = 0; pr < r.pivots.size(); ++pr)
      out.at(row, r.pivots[pr]) = f.neg(r.reduced.at(pr, free_col));
    ++row;
  }
  return out;
}

struct SolveResult {
  enum class Status { unique, underdetermined, no_solution };
  Status status;
  std::vector<Fel> x;  // a particular solution when status != no_solution
  size_t kernel_dim;
};

// Solve m * x = b. Reports uniqueness via the kernel dimension.
inline SolveResult solve(const Matrix& m, const std::vector<Fel>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols())
    return SolveResult{SolveResult::Status::no_solution, {}, 0};
  std::vector<Fel> x(m.cols(), f.zero());
  for (size_t pr = 0; pr < r.pivots.size(); ++pr) x[r.pivots[pr]] = r.reduced.at(pr, m.cols());
  size_t kdim = m.cols() - r.pivots.size();
  return SolveResult{kdim == 0 ? SolveResult::Status::unique : SolveResult::Status::underdetermined,
                     std::move(x), kdim};
}

// True iff v lies in the column span of `cols`.
inline bool in_span(const Matrix& cols, const std::vector<Fel>& v) {
  return solve(cols, v).status != SolveResult::Status::no_solution;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Field& f = m.field();
  const size_t n = m.rows();
  Matrix aug(f, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::invalid_argument("matrix is singular");
  Matrix out(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = r.reduced.at(i, n + j);
  return out;
}

// Row spaces compared by canonical form: equal iff the nonzero rows of the
// two reduced echelon forms agree.
inline bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field() || a.cols() != b.cols()) return false;
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank || ra.pivots != rb.pivots) return false;
  for (size_t i = 0; i < ra.rank; ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
  return true;
}

// Text format, bit-exact: "rows cols field-descriptor" then one line per row
// of space-separated canonical element indices.
inline std::string matrix_to_text(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().descriptor() << '\n';
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.field().format(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

inline Matrix matrix_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  size_t rows, cols;
  std::string descriptor;
  if (!(is >> rows >> cols >> descriptor)) throw parse_error("malformed matrix header");
  Field f = Field::parse(descriptor);
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok)) throw parse_error("matrix body shorter than header promises");
      m.at(i, j) = f.parse_element(tok);
    }
  std::string extra;
  if (is >> extra) throw parse_error("trailing data after matrix body");
  return m;
}

inline size_t hamming_weight(const std::vector<Fel>& v) {
  size_t w = 0;
  for (Fel x : v)
    if (x.v != 0) ++w;
  return w;
}

inline std::vector<Fel> vec_add(const Field& f, const std::vector<Fel>& a, const std::vector<Fel>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  std::vector<Fel> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

inline std::vector<Fel> vec_sub(const Field& f, const std::vector<Fel>& a, const std::vector<Fel>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  std::vector<Fel> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

inline bool is_zero(const std::vector<Fel>& v) {
  for (Fel x : v)
    if (x.v != 0) return false;
  return true;
}

}  // namespace sags
