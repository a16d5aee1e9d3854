#include "anonrs/matrix.hpp"

#include <string>
#include <utility>

#include "anonrs/error.hpp"

namespace anonrs {
namespace {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[i] is the pivot of row i
  bool odd_swaps = false;
  Element pivot_product;
};

// Reduced row echelon form. Only the first `pivot_limit` columns are
// eligible as pivots (augmented systems keep the right-hand side out).
Echelon row_reduce(Matrix m, std::size_t pivot_limit) {
  Echelon out{m, {}, false, m.field().one()};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
      out.odd_swaps = !out.odd_swaps;
    }
    out.pivot_product *= a(row, col);
    const Element inv = a(row, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Element factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    raise(Errc::shape, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                           std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) raise(Errc::field_mismatch, "matrix entry from another field");
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

std::vector<Element> Matrix::multiply(std::span<const Element> v) const {
  if (v.size() != cols_) raise(Errc::shape, "vector length does not match column count");
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Element acc = field_.zero();
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out.push_back(std::move(acc));
  }
  return out;
}

Element det(const Matrix& m) {
  if (m.rows() != m.cols()) raise(Errc::shape, "determinant of a non-square matrix");
  if (m.rows() == 0) return m.field().one();
  const Echelon e = row_reduce(m, m.cols());
  if (e.pivot_cols.size() < m.rows()) return m.field().zero();
  return e.odd_swaps ? -e.pivot_product : e.pivot_product;
}

std::size_t rank(const Matrix& m) { return row_reduce(m, m.cols()).pivot_cols.size(); }

std::vector<std::vector<Element>> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Element>> solve_consistent(const Matrix& m, std::span<const Element> b) {
  if (b.size() != m.rows()) raise(Errc::shape, "right-hand side length does not match row count");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    if (!(b[r].field() == m.field())) raise(Errc::field_mismatch, "right-hand side from another field");
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug), m.cols());
  for (std::size_t r = e.pivot_cols.size(); r < m.rows(); ++r) {
    if (!e.reduced(r, m.cols()).is_zero()) return std::nullopt;
  }
  std::vector<Element> x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  return x;
}

}  // namespace anonrs
