#pragma once

#include <string>
#include <vector>

#include "chernform/chern.hpp"
#include "chernform/curvature.hpp"
#include "chernform/polynomial.hpp"
#include "chernform/sampling.hpp"

namespace chernform {

/// Weakly decreasing parts r >= l_1 >= ... >= l_i >= 0 with sum i, stored with
/// trailing zeros so that length == weight.
class Partition {
 public:
  /// Validates monotonicity, nonnegativity and parts <= bound. Weight need
  /// not equal length here; see in_gamma().
  Partition(std::vector<int> parts, int bound);

  const std::vector<int>& parts() const { return parts_; }
  int bound() const { return bound_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// weight() == length(), i.e. a member of Gamma(i, r).
  bool in_gamma() const { return weight() == length(); }
  /// Nonzero parts only.
  std::vector<int> trimmed() const;
  /// e.g. "(2,1)"; trailing zeros omitted.
  std::string to_string() const;

  /// Parses "2,1,0" or "(2,1)"; pads with zeros to length == weight.
  static Partition parse(const std::string& text, int bound);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int bound_;
};

/// Gamma(i, r) in lexicographically descending order.
std::vector<Partition> partitions(int weight, int bound);

/// Integer polynomial in c_1..c_r (variable k is c_{k+1}, of degree k+1).
using ChernPolynomial = Polynomial<mpz_class>;

std::vector<int> chern_weights(int r);
std::vector<std::string> chern_names(int r);

/// The single variable c_j (j in 1..r), 1 for j == 0, 0 otherwise.
ChernPolynomial chern_variable(int j, int r);

/// S_lambda = det(c_{l_j - j + k}) (j row, k column), with c_0 = 1 and
/// c_j = 0 outside 0..r.
ChernPolynomial schur_polynomial(const Partition& lambda, int r);

/// Substitutes c_j -> c_j(E,h) and expands with the wedge product.
Form evaluate_on_forms(const ChernPolynomial& poly, const ChernFormSet& cs);

struct SchurEntry {
  int degree = 0;
  Partition lambda{{}, 1};
  VerdictReport verdict;
};

struct SchurReport {
  bool pass = true;
  std::vector<SchurEntry> entries;
};

/// Builds Omega = A ^ conj(A)^T from the tensor, then samples every S_lambda
/// for lambda in Gamma(i, r), i in [min_degree, max_degree] (clamped to n).
/// Each (i, lambda) uses its own derived seed.
SchurReport verify_schur_nonnegativity(const CurvatureTensor& instance, int min_degree,
                                       int max_degree, const SamplingOptions& options);

/// Same, for an already-computed set of Chern forms.
SchurReport verify_schur_nonnegativity(const ChernFormSet& cs, int min_degree, int max_degree,
                                       const SamplingOptions& options);

}  // namespace chernform
