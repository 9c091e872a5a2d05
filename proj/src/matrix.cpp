#include "mobius/matrix.hpp"

#include <string>

#include "mobius/errors.hpp"

namespace mobius {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("matrix fields differ: " + a.field().name() + " vs " + b.field().name());
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ShapeMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                          " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) { entries_[i * cols_ + j] = field_.reduce(value); }

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  Scalar cr = field_.reduce(c);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_.mul(cr, entries_[k]);
  return r;
}

Matrix Matrix::column(std::size_t j) const { return select_cols({j}); }

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.entries_[i * cols_ + j] = (*this)(idx[i], j);
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r.entries_[i * idx.size() + j] = (*this)(i, idx[j]);
  return r;
}

void Matrix::place(std::size_t row, std::size_t col, const Matrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_)
    throw ShapeMismatch("block " + shape(block) + " does not fit in " + shape(*this));
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) entries_[(row + i) * cols_ + col + j] = block(i, j);
}

void Matrix::accumulate(std::size_t row, std::size_t col, const Matrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_)
    throw ShapeMismatch("block " + shape(block) + " does not fit in " + shape(*this));
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) {
      auto& e = entries_[(row + i) * cols_ + col + j];
      e = field_.add(e, block(i, j));
    }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("cannot add " + shape(a) + " and " + shape(b));
  Matrix r = a;
  r.accumulate(0, 0, b);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-1); }

Matrix operator*(const Matrix& a, const Matrix& b) { return compose(a, b); }

Matrix compose(const Matrix& f, const Matrix& g) {
  require_same_field(f, g);
  if (g.rows() != f.cols()) throw ShapeMismatch("cannot compose " + shape(f) + " after " + shape(g));
  const FieldSpec& k = f.field();
  Matrix r(k, f.rows(), g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t l = 0; l < f.cols(); ++l) {
      const Scalar& fil = f(i, l);
      if (fil == 0) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (g(l, j) == 0) continue;
        r.set(i, j, k.add(r(i, j), k.mul(fil, g(l, j))));
      }
    }
  return r;
}

Matrix hstack(const std::vector<Matrix>& blocks, FieldSpec field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix r(field, rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    r.place(0, at, b);
    at += b.cols();
  }
  return r;
}

Matrix vstack(const std::vector<Matrix>& blocks, FieldSpec field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix r(field, rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    r.place(at, 0, b);
    at += b.rows();
  }
  return r;
}

Echelon row_reduce(const Matrix& m) {
  const FieldSpec& k = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Scalar inv = k.inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = k.mul(a[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] = k.sub(a[i][j], k.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }

  Matrix reduced(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) reduced.set(i, j, a[i][j]);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivot_cols.size();
}

Matrix kernel_basis(const Matrix& m) {
  const FieldSpec& k = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(k, m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis.set(free_cols[f], f, 1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      const Scalar& v = e.reduced(r, free_cols[f]);
      if (v != 0) basis.set(e.pivot_cols[r], f, k.neg(v));
    }
  }
  return basis;
}

Matrix cokernel_map(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw ShapeMismatch("cannot solve " + shape(a) + " x = " + shape(b));
  const FieldSpec& k = a.field();
  Matrix aug = hstack({a, b}, k, a.rows());
  Echelon e = row_reduce(aug);
  Matrix x(k, a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::size_t c = e.pivot_cols[r];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(c, j, e.reduced(r, a.cols() + j));
  }
  return x;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::size_t cohomology_dim(const Matrix& in, const Matrix& out) {
  if (in.rows() != out.cols())
    throw ShapeMismatch("incoming map " + shape(in) + " does not meet outgoing map " + shape(out));
  if (!compose(out, in).is_zero()) throw NotAComplex("composite of consecutive coboundaries is nonzero");
  return (out.cols() - rank(out)) - rank(in);
}

}  // namespace mobius
