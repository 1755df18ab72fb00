#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chernform/scalar.hpp"

namespace chernform {

/// Largest supported number of holomorphic coordinates.
inline constexpr int kMaxBaseDim = 14;

/// A canonical exterior monomial dz^H ^ dzbar^A at a point. Bit k of a mask
/// stands for coordinate k+1; dz factors come first, each family in
/// increasing index order.
struct Monomial {
  std::uint16_t dz = 0;
  std::uint16_t dzbar = 0;

  int p() const;  // number of dz factors
  int q() const;  // number of dzbar factors

  auto operator<=>(const Monomial&) const = default;
};

/// Builds a monomial from 1-based strictly increasing index lists.
Monomial make_monomial(int n, const std::vector<int>& dz, const std::vector<int>& dzbar);

/// Constant-coefficient complex differential form at one point, stored as a
/// sparse map from canonical monomials to nonzero coefficients.
class Form {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Form(int base_dim, ScalarMode mode);

  static Form constant(int base_dim, const Scalar& value);
  static Form one(int base_dim, ScalarMode mode);
  /// dz^index, 1-based.
  static Form dz(int base_dim, int index, ScalarMode mode);
  /// dzbar^index, 1-based.
  static Form dzbar(int base_dim, int index, ScalarMode mode);
  static Form monomial(int base_dim, Monomial m, const Scalar& coefficient);

  int base_dim() const { return n_; }
  ScalarMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of `m`, zero if absent.
  Scalar coefficient(Monomial m) const;

  /// Accumulates c into the coefficient of m, dropping it if it cancels.
  void add_term(Monomial m, const Scalar& c);

  /// True iff every term has bidegree (p, q). The zero form is homogeneous
  /// of every bidegree.
  bool is_homogeneous(int p, int q) const;
  /// Bidegree of the first term; (-1, -1) for the zero form.
  std::pair<int, int> leading_bidegree() const;

  /// max(|c|) over all coefficients, 0 for the zero form.
  double max_abs_coefficient() const;
  /// max(1, max_abs_coefficient()).
  double scale() const;

  Form to_mode(ScalarMode mode) const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& s);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& s) { return a *= s; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  Form operator-() const;

  /// Exact comparison of canonical term maps (mode and base_dim included).
  friend bool operator==(const Form& a, const Form& b);

  /// Largest coefficient-wise |a - b|.
  friend double max_abs_difference(const Form& a, const Form& b);

  std::string to_string() const;

 private:
  void check_compatible(const Form& o, const char* where) const;

  int n_;
  ScalarMode mode_;
  Terms terms_;
};

/// Exterior product.
Form wedge(const Form& a, const Form& b);

/// Complex conjugation: swaps dz with dzbar and conjugates coefficients.
Form conjugate(const Form& a);

/// Coordinates of a (1,0)-vector in the basis dual to dz^1..dz^n.
using TangentVector = std::vector<Scalar>;

/// (-sqrt(-1))^(p^2) * phi(X_1..X_p, conj X_1..conj X_p) for a (p,p)-form.
/// Each monomial dz^I ^ dzbar^J contributes det(X_b^{I_a}) * conj(det(X_b^{J_a})).
Scalar evaluate(const Form& phi, std::span<const TangentVector> vectors);

/// Float fast path of `evaluate`, used by the sampler.
std::complex<double> evaluate_float(const Form& phi,
                                    std::span<const std::vector<std::complex<double>>> vectors);

}  // namespace chernform
