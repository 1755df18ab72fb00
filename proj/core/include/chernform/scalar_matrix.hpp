#pragma once

#include <cstddef>
#include <vector>

#include "chernform/scalar.hpp"

namespace chernform {

/// Dense row-major matrix of Scalars sharing one mode.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols, ScalarMode mode);

  static ScalarMatrix identity(std::size_t n, ScalarMode mode);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ScalarMode mode() const { return mode_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ScalarMatrix conj_transpose() const;
  ScalarMatrix to_mode(ScalarMode mode) const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

  /// Largest |entry - other entry|; shapes must agree.
  double max_abs_difference(const ScalarMatrix& other) const;
  /// max over columns of the column absolute sum.
  double norm1() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  ScalarMode mode_;
  std::vector<Scalar> data_;
};

Scalar determinant(ScalarMatrix m);

/// Inverse by Gauss-Jordan elimination. Exact mode rejects a zero
/// determinant; float mode rejects when the 1-norm condition estimate
/// exceeds `max_condition`.
ScalarMatrix inverse(const ScalarMatrix& m, double max_condition = 1e12);

/// P^H P == I exactly (exact mode) or within `tol` entrywise (float mode).
bool is_unitary(const ScalarMatrix& p, double tol = 1e-12);

}  // namespace chernform
