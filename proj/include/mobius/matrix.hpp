#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mobius/field.hpp"

namespace mobius {

// Dense matrix over an exact field, row-major. Acts on column vectors, so a
// map V -> W between spaces of dimension n and m is an m x n matrix.
// Zero-row and zero-column matrices are legal (maps to/from the zero space).
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(FieldSpec field, std::size_t n);
  // Entries are reduced into the field.
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  // Stores field().reduce(value).
  void set(std::size_t i, std::size_t j, const Scalar& value);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  Matrix column(std::size_t j) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  // Copies `block` into this matrix with its top-left corner at (row, col).
  void place(std::size_t row, std::size_t col, const Matrix& block);
  // Adds `block` into this matrix with its top-left corner at (row, col).
  void accumulate(std::size_t row, std::size_t col, const Matrix& block);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

// f∘g as matrices, i.e. f * g. Requires g.rows() == f.cols().
// Throws ShapeMismatch or FieldMismatch.
Matrix compose(const Matrix& f, const Matrix& g);

Matrix hstack(const std::vector<Matrix>& blocks, FieldSpec field, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, FieldSpec field, std::size_t cols);

// Reduced row echelon form. The pivot is the topmost nonzero entry of the
// leftmost column that still has one, so bases are deterministic.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of {v : m v = 0}. Deterministic: one basis vector per
// free column, with a 1 in that column.
Matrix kernel_basis(const Matrix& m);

// Rows form a basis of the left kernel; the resulting matrix q satisfies
// q * m = 0 and ker(q) = im(m). Used as the quotient map onto coker(m).
Matrix cokernel_map(const Matrix& m);

// Some x with a * x = b, or nullopt if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

bool is_invertible(const Matrix& m);

// dim ker(out) - rank(in) at the middle slot of in -> V -> out.
// Throws NotAComplex if out∘in != 0 and ShapeMismatch if in.rows() != out.cols().
std::size_t cohomology_dim(const Matrix& in, const Matrix& out);

}  // namespace mobius
