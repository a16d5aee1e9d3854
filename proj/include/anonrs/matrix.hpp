#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "anonrs/field.hpp"

namespace anonrs {

// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::vector<Element> multiply(std::span<const Element> v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

// All four run Gaussian elimination with first-nonzero pivoting, scanning
// columns left to right and rows top to bottom, so results are reproducible.
Element det(const Matrix& m);
std::size_t rank(const Matrix& m);
// One basis vector per free column (that coordinate set to 1).
std::vector<std::vector<Element>> kernel_basis(const Matrix& m);
// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Element>> solve_consistent(const Matrix& m, std::span<const Element> b);

}  // namespace anonrs
