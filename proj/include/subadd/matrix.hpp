#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "subadd/rational.hpp"

namespace subadd {

using QVector = std::vector<Rational>;

/// Dense rectangular matrix of exact rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Square submatrix on the given row/column indices (same list for both).
  QMatrix principal(std::span<const std::size_t> idx) const;

  QVector operator*(std::span<const Rational> x) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
Rational determinant(const QMatrix& m);

/// Solves m·x = rhs exactly. Throws Error{SingularMatrix} when m is not
/// square-invertible or rhs has the wrong length.
QVector solve_linear(const QMatrix& m, std::span<const Rational> rhs);

/// Leading-principal-minor test; throws Error{NonSymmetric}.
bool is_negative_definite(const QMatrix& m);

/// Basis of the right null space {x : m·x = 0}, each vector scaled to
/// coprime integers.
std::vector<QVector> null_space(const QMatrix& m);

}  // namespace subadd
