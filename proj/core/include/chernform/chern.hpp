#pragma once

#include <vector>

#include "chernform/curvature.hpp"
#include "chernform/form.hpp"

namespace chernform {

class Partition;

/// How the per-degree constant (sqrt(-1)/2pi)^i is applied.
///   Numeric: folded into float coefficients.
///   Exact:   forms carry (sqrt(-1))^i times the principal-minor sum; the
///            factor (2pi)^{-i} is kept aside and reported by normalization().
enum class PrefactorMode { Numeric, Exact };

/// Chern forms c_0..c_k, k = min(r, n), of one curvature matrix.
class ChernFormSet {
 public:
  ChernFormSet(int base_dim, int rank, std::vector<Form> forms, PrefactorMode prefactor,
               bool witnessed);

  int base_dim() const { return n_; }
  int rank() const { return r_; }
  /// Highest stored degree, min(r, n).
  int top_degree() const { return static_cast<int>(forms_.size()) - 1; }
  PrefactorMode prefactor() const { return prefactor_; }
  ScalarMode mode() const { return forms_.front().mode(); }
  bool witnessed() const { return witnessed_; }

  /// c_i, with c_0 = 1 and c_i = 0 for i < 0 or i > top_degree().
  Form c(int i) const;
  const std::vector<Form>& forms() const { return forms_; }

  /// Scalar multiplying a degree-`degree` form to obtain its true value:
  /// (2pi)^{-degree} in Exact prefactor mode, 1 in Numeric mode.
  double normalization(int degree) const;

  /// Float-mode Numeric-prefactor copy (identity if already numeric).
  ChernFormSet to_numeric() const;

 private:
  int n_;
  int r_;
  std::vector<Form> forms_;
  PrefactorMode prefactor_;
  bool witnessed_;
};

/// c_i from det(t I + (sqrt(-1)/2pi) Omega): sums of i x i principal minors
/// (Leibniz expansion; entries have even degree and commute).
ChernFormSet chern_forms(const CurvatureMatrix& omega, PrefactorMode prefactor = PrefactorMode::Numeric);

/// c_lambda = c_{lambda_1} ^ ... ^ c_{lambda_i}.
Form chern_product(const ChernFormSet& cs, const Partition& lambda);

/// The normalized volume element (sqrt(-1))^{n^2} dz^1..dz^n dzbar^1..dzbar^n,
/// which equals the product of the (sqrt(-1) dz^k ^ dzbar^k).
Form volume_element(int base_dim, ScalarMode mode);

/// Coefficient of a real (n,n)-form relative to volume_element(n). Throws
/// InvalidInput for a wrong degree or a non-real coefficient.
Scalar top_coefficient(const Form& phi);

}  // namespace chernform
