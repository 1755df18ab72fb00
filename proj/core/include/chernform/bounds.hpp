#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chernform/chern.hpp"
#include "chernform/sampling.hpp"
#include "chernform/schur.hpp"

namespace chernform {

enum class ChainSide { Lower, Upper };

/// One inequality "larger >= smaller" in the chain, checked by sampling the
/// difference form. `elementary` steps are the bare Schur-difference
/// inequalities; the others are those steps multiplied by the factors
/// already moved along the chain.
struct ChainStep {
  ChainSide side = ChainSide::Lower;
  bool elementary = false;
  std::string statement;
  VerdictReport verdict;
};

struct TopComparison {
  double c_n = 0.0;       // top(c_n)
  double c_lambda = 0.0;  // top(c_lambda)
  double c1_n = 0.0;      // top(c_1^n)
  double scale = 0.0;      // max of the values and of the coefficient products they sum
  bool pass = true;
};

struct ChainReport {
  Partition lambda{{}, 1};
  int degree = 0;
  std::vector<ChainStep> steps;
  std::optional<TopComparison> top;  // present when degree == n
  bool pass = true;
};

/// Verifies 0 <= c_i <= c_lambda <= c_1^i step by step:
///   lower: c_a <= c_{a-1}c_1 <= ... <= c_b c_{a-b}, peeling b = l_1, l_2, ...
///   upper: c_l <= c_{l-1}c_1 <= ... <= c_1^l for each part l.
/// Each difference form is sampled with nonnegative_sampled. At i == n the
/// top coefficients are compared with relative tolerance options.tol.
/// Throws InvalidInput if `cs` does not come from a witnessed curvature.
ChainReport bounds_chain_check(const ChernFormSet& cs, const Partition& lambda,
                               const SamplingOptions& options);

}  // namespace chernform
