#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "chernform/polynomial.hpp"
#include "chernform/schur.hpp"

namespace chernform {

/// Even-degree cohomology class: rational polynomial in the hyperplane
/// generators x_1..x_f of the projective factors, reduced modulo
/// x_j^{k_j + 1}.
using RingElement = Polynomial<mpq_class>;

struct ProjectiveFactor {
  int k = 1;
};
struct TorusFactor {
  int k = 1;
};
using Factor = std::variant<ProjectiveFactor, TorusFactor>;

/// Product of projective spaces and complex tori, described by its even
/// cohomology ring, fundamental-class functional and tangent Chern classes.
class ModelManifold {
 public:
  /// `tangent_chern[j-1]` is c_j(T M) for j = 1..dim.
  ModelManifold(std::vector<Factor> factors, std::vector<RingElement> tangent_chern, std::string label,
                bool tangent_globally_generated, bool cotangent_globally_generated);

  int dim() const { return dim_; }
  const std::vector<Factor>& factors() const { return factors_; }
  int num_generators() const { return static_cast<int>(bounds_.size()); }
  /// Nilpotency order k_j of each generator (x_j^{k_j+1} = 0).
  const std::vector<int>& generator_bounds() const { return bounds_; }
  const std::string& label() const { return label_; }
  bool tangent_globally_generated() const { return tangent_gg_; }
  bool cotangent_globally_generated() const { return cotangent_gg_; }

  const std::vector<RingElement>& tangent_chern() const { return tangent_chern_; }
  /// c_j(T M) with c_0 = 1 and 0 outside 0..dim.
  RingElement tangent_class(int j) const;

  RingElement zero() const { return RingElement(num_generators()); }
  RingElement one() const { return RingElement::constant(num_generators(), 1); }
  /// Hyperplane class of the j-th projective factor (0-based).
  RingElement generator(int j) const { return RingElement::variable(num_generators(), j); }

  RingElement reduce(const RingElement& e) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  /// Fundamental-class functional: coefficient of prod x_j^{k_j}, and 0 if
  /// any torus factor has positive dimension.
  mpq_class integrate(const RingElement& e) const;

  /// Total degree of every term (all generators have degree 1); -1 for zero,
  /// -2 if not homogeneous.
  static int homogeneous_degree(const RingElement& e);

 private:
  int dim_ = 0;
  std::vector<Factor> factors_;
  std::vector<int> bounds_;
  std::vector<RingElement> tangent_chern_;
  std::string label_;
  bool tangent_gg_ = false;
  bool cotangent_gg_ = false;
};

/// The zero-dimensional model.
ModelManifold point();
/// CP^k with c(T) = (1 + x)^{k+1}.
ModelManifold projective_space(int k);
/// Complex torus of dimension k: trivial tangent bundle.
ModelManifold complex_torus(int k);
/// Cartesian product; total Chern classes multiply.
ModelManifold product(const ModelManifold& a, const ModelManifold& b);

/// Model expression: atoms "CPk", "Tk" and "pt" joined by 'x', e.g. "CP1xCP2xT1".
ModelManifold parse_model(const std::string& text);

/// c_j(T* M) = (-1)^j c_j(T M), j = 1..dim.
std::vector<RingElement> dual_tangent_chern(const ModelManifold& m);

/// integral of prod c_{l_j}; `classes` overrides the tangent classes
/// (classes[j-1] is c_j). Throws InvalidInput if weight(lambda) != dim.
mpz_class chern_number(const ModelManifold& m, const Partition& lambda,
                       const std::vector<RingElement>* classes = nullptr);

struct NumberBoundsReport {
  bool is_signed = false;
  std::vector<std::pair<Partition, mpz_class>> numbers;  // over Gamma(n, n)
  mpz_class lower;  // c_n (signed: (-1)^n c_n)
  mpz_class upper;  // c_1^n (signed: (-1)^n c_1^n)
  bool ordering_pass = true;
  bool vanishing_applies = false;  // upper == 0
  bool vanishing_pass = true;
  bool pass = true;
};

/// Checks 0 <= c_n <= c_lambda <= c_1^n over Gamma(n, n) (signed: with the
/// cotangent classes), plus: c_1^n == 0 implies every c_lambda == 0.
/// Requires the matching globally-generated catalog flag.
NumberBoundsReport verify_number_bounds(const ModelManifold& m, bool use_signed);

/// Universal Todd polynomial in c_1..c_n, truncated at weighted degree n,
/// from the series x / (1 - e^{-x}) via log/exp in power sums and Newton's
/// identities.
RingElement todd_polynomial(int n);

/// Coefficients t_0..t_order of x / (1 - e^{-x}).
std::vector<mpq_class> todd_series(int order);

/// Td(M), dim <= 8.
RingElement todd_class(const ModelManifold& m);

/// chi(M, L^{mm}) = integral of Td(M) * exp(mm * line_c1). Throws
/// ConsistencyError if the result is not an integer.
mpq_class euler_characteristic(const ModelManifold& m, const RingElement& line_c1, long mm);

/// (-1)^n c_1^n[M] / n!: leading coefficient of chi(M, K^m) in m.
mpq_class kodaira_leading(const ModelManifold& m);

/// First Chern class of a line bundle: "K" (canonical, -c_1(M)), "O(d)"
/// (degree d on every projective factor) or "O(d1,d2,...)" (one degree per
/// projective factor).
RingElement parse_line(const ModelManifold& m, const std::string& text);

}  // namespace chernform
