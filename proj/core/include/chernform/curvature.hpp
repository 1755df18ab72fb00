#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chernform/form.hpp"
#include "chernform/scalar_matrix.hpp"

namespace chernform {

/// r x m matrix of (1,0)-forms. The column count is unconstrained.
class FactorMatrix {
 public:
  FactorMatrix(int base_dim, int rows, int cols, ScalarMode mode);

  int base_dim() const { return n_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ScalarMode mode() const { return mode_; }

  const Form& at(int i, int k) const { return entries_[index(i, k)]; }
  /// Replaces entry (i, k); the form must be (1,0)-homogeneous over base_dim.
  void set(int i, int k, Form f);

  /// conj(P)^T * A
  FactorMatrix left_multiplied_by_adjoint(const ScalarMatrix& p) const;

 private:
  std::size_t index(int i, int k) const;

  int n_;
  int rows_;
  int cols_;
  ScalarMode mode_;
  std::vector<Form> entries_;
};

/// r x r matrix of (1,1)-forms, optionally carrying a Bott-Chern witness A
/// with Omega = A ^ conj(A)^T.
class CurvatureMatrix {
 public:
  CurvatureMatrix(int base_dim, int rank, ScalarMode mode);
  /// Validates every entry; if a witness is supplied it must reproduce the
  /// entries (exactly, or within 1e-12 * scale in float mode).
  CurvatureMatrix(int base_dim, int rank, std::vector<Form> entries,
                  std::optional<FactorMatrix> witness = std::nullopt);

  int base_dim() const { return n_; }
  int rank() const { return r_; }
  ScalarMode mode() const { return mode_; }
  const Form& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * r_ + j)]; }
  const std::vector<Form>& entries() const { return entries_; }
  const std::optional<FactorMatrix>& witness() const { return witness_; }
  bool witnessed() const { return witness_.has_value(); }

  double scale() const;
  CurvatureMatrix to_mode(ScalarMode mode) const;

 private:
  int n_;
  int r_;
  ScalarMode mode_;
  std::vector<Form> entries_;
  std::optional<FactorMatrix> witness_;
};

/// Coefficients T^{(p)}_{ik}: p coordinate, i frame row, k column (0-based).
class CurvatureTensor {
 public:
  CurvatureTensor(int base_dim, int rank, int cols, ScalarMode mode);

  int base_dim() const { return n_; }
  int rank() const { return r_; }
  int cols() const { return m_; }
  ScalarMode mode() const { return mode_; }

  const Scalar& at(int p, int i, int k) const { return data_[index(p, i, k)]; }
  Scalar& at(int p, int i, int k) { return data_[index(p, i, k)]; }

  /// Frobenius norm squared, as a double.
  double norm_squared() const;

 private:
  std::size_t index(int p, int i, int k) const;

  int n_;
  int r_;
  int m_;
  ScalarMode mode_;
  std::vector<Scalar> data_;
};

/// Omega^i_j = sum_k A_ik ^ conj(A_jk), witness = A.
CurvatureMatrix bott_chern_curvature(const FactorMatrix& a);

/// A_ik = sum_p T^{(p)}_ik dz^p.
FactorMatrix factor_from_tensor(const CurvatureTensor& t);

/// P^{-1} Omega P. A unitary P carries the witness to conj(P)^T A; any
/// other P drops it. Throws InvalidInput for singular P.
CurvatureMatrix change_frame(const CurvatureMatrix& omega, const ScalarMatrix& p);

/// Sum R^i_{jpq} xi^j eta^p conj(xi^i) conj(eta^q) with
/// R^i_{jpq} = sum_k T^{(p)}_ik conj(T^{(q)}_jk).
Scalar griffiths_contraction(const CurvatureTensor& t, std::span<const Scalar> xi,
                             std::span<const Scalar> eta);

/// sum_k |sum_{i,p} T^{(p)}_ik conj(xi^i) eta^p|^2.
Scalar griffiths_sum_of_squares(const CurvatureTensor& t, std::span<const Scalar> xi,
                                std::span<const Scalar> eta);

/// Bound on |griffiths value| used to scale route-agreement tolerances:
/// max(1, |T|^2 |xi|^2 |eta|^2).
double griffiths_scale(const CurvatureTensor& t, std::span<const Scalar> xi,
                       std::span<const Scalar> eta);

/// Real Griffiths quadratic form value. Evaluates both routes and throws
/// ConsistencyError if they differ by more than 1e-12 * scale (exact mode:
/// at all).
Scalar griffiths_value(const CurvatureTensor& t, std::span<const Scalar> xi,
                       std::span<const Scalar> eta);

/// Seeded random tensor. Float mode: i.i.d. standard complex normal entries.
/// Exact mode: real and imaginary parts i.i.d. uniform on {-3..3}/2.
CurvatureTensor random_tensor(int base_dim, int rank, int cols, ScalarMode mode,
                              std::uint64_t seed);

/// Seeded random unitary matrix. Float mode: Gram-Schmidt on a complex
/// normal matrix. Exact mode: permutation times diagonal of {1,i,-1,-i}.
ScalarMatrix random_unitary(int size, ScalarMode mode, std::uint64_t seed);

/// Seeded random invertible (well-conditioned) matrix: identity plus a
/// complex normal perturbation of norm ~0.5 per entry, float mode.
ScalarMatrix random_invertible(int size, std::uint64_t seed);

}  // namespace chernform
