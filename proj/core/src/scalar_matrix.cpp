#include "chernform/scalar_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "chernform/errors.hpp"

namespace chernform {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, ScalarMode mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, Scalar::zero(mode)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n, ScalarMode mode) {
  ScalarMatrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(mode);
  return m;
}

ScalarMatrix ScalarMatrix::conj_transpose() const {
  ScalarMatrix t(cols_, rows_, mode_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

ScalarMatrix ScalarMatrix::to_mode(ScalarMode mode) const {
  ScalarMatrix out(rows_, cols_, mode);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].to_mode(mode);
  return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("ScalarMatrix *: shape mismatch");
  require_same_mode(a.mode_, b.mode_, "ScalarMatrix *");
  ScalarMatrix c(a.rows_, b.cols_, a.mode_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

double ScalarMatrix::max_abs_difference(const ScalarMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InvalidInput("ScalarMatrix: shape mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k)
    worst = std::max(worst, std::abs(data_[k].to_complex() - other.data_[k].to_complex()));
  return worst;
}

double ScalarMatrix::norm1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j).abs();
    best = std::max(best, s);
  }
  return best;
}

namespace {

// Row index of the pivot for column `col` at or below `from`; rows_ if none.
std::size_t choose_pivot(const ScalarMatrix& m, std::size_t col, std::size_t from) {
  std::size_t best = m.rows();
  double best_abs = 0.0;
  for (std::size_t i = from; i < m.rows(); ++i) {
    const Scalar& v = m(i, col);
    if (v.is_zero()) continue;
    if (m.mode() == ScalarMode::Exact) return i;
    if (v.abs() > best_abs) {
      best_abs = v.abs();
      best = i;
    }
  }
  return best;
}

void swap_rows(ScalarMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Scalar determinant(ScalarMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.mode());
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t piv = choose_pivot(m, col, col);
    if (piv == n) return Scalar::zero(m.mode());
    if (piv != col) {
      swap_rows(m, piv, col);
      det = -det;
    }
    const Scalar p = m(col, col);
    det *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Scalar f = m(i, col) / p;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

ScalarMatrix inverse(const ScalarMatrix& m, double max_condition) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse: matrix is not square");
  const std::size_t n = m.rows();
  ScalarMatrix a = m;
  ScalarMatrix inv = ScalarMatrix::identity(n, m.mode());
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t piv = choose_pivot(a, col, col);
    if (piv == n) throw InvalidInput("inverse: matrix is singular");
    if (piv != col) {
      swap_rows(a, piv, col);
      swap_rows(inv, piv, col);
    }
    const Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  if (m.mode() == ScalarMode::Float) {
    const double cond = m.norm1() * inv.norm1();
    if (!std::isfinite(cond) || cond > max_condition)
      throw InvalidInput("inverse: matrix is numerically singular (condition estimate " +
                         std::to_string(cond) + ")");
  }
  return inv;
}

bool is_unitary(const ScalarMatrix& p, double tol) {
  if (p.rows() != p.cols()) return false;
  const ScalarMatrix g = p.conj_transpose() * p;
  const ScalarMatrix id = ScalarMatrix::identity(p.rows(), p.mode());
  if (p.mode() == ScalarMode::Exact) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (!(g(i, j) == id(i, j))) return false;
    return true;
  }
  return g.max_abs_difference(id) <= tol;
}

}  // namespace chernform
