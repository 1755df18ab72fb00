#include "chernform/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chernform/errors.hpp"

namespace chernform {

namespace {

// "c3*c1" style product label; c_0 factors are dropped, empty product is "1".
std::string product_label(const std::vector<int>& indices) {
  std::string out;
  for (int k : indices) {
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

class ChainBuilder {
 public:
  ChainBuilder(const ChernFormSet& cs, const SamplingOptions& options, ChainReport& report)
      : cs_(cs), options_(options), report_(report) {}

  Form product(const std::vector<int>& indices) const {
    Form out = Form::one(cs_.base_dim(), cs_.mode());
    for (int k : indices)
      if (k != 0) out = wedge(out, cs_.c(k));
    return out;
  }

  // Records "larger >= smaller" for the given index products.
  void check(ChainSide side, bool elementary, const std::vector<int>& larger,
             const std::vector<int>& smaller) {
    const Form diff = smaller.empty() ? product(larger) : product(larger) - product(smaller);
    SamplingOptions local = options_;
    local.seed = stream_seed(options_.seed, next_stream_++);
    ChainStep step;
    step.side = side;
    step.elementary = elementary;
    step.statement = product_label(larger) + " >= " + (smaller.empty() ? "0" : product_label(smaller));
    step.verdict = nonnegative_sampled(diff, local);
    report_.pass = report_.pass && step.verdict.pass;
    report_.steps.push_back(std::move(step));
  }

 private:
  const ChernFormSet& cs_;
  const SamplingOptions& options_;
  ChainReport& report_;
  std::uint64_t next_stream_ = 0;
};

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ChainReport bounds_chain_check(const ChernFormSet& cs_in, const Partition& lambda,
                               const SamplingOptions& options) {
  if (!cs_in.witnessed())
    throw InvalidInput("bounds_chain_check: Chern forms do not come from a witnessed (Bott-Chern) curvature");
  if (!lambda.in_gamma()) throw InvalidInput("bounds_chain_check: partition weight must equal its length");
  const int i = lambda.weight();
  if (i < 1 || i > cs_in.base_dim())
    throw InvalidInput("bounds_chain_check: partition weight must be in 1..n");
  if (lambda.parts().front() > cs_in.rank())
    throw InvalidInput("bounds_chain_check: partition part exceeds rank");

  const ChernFormSet cs = cs_in.to_numeric();
  ChainReport report;
  report.lambda = lambda;
  report.degree = i;
  ChainBuilder chain(cs, options, report);
  const std::vector<int> parts = lambda.trimmed();

  // Lower chain.
  chain.check(ChainSide::Lower, true, {i}, {});
  std::vector<int> prefix;
  int remaining = i;
  for (int b : parts) {
    const int steps = std::min(b, remaining - b);
    for (int j = 1; j <= steps; ++j) {
      const std::vector<int> larger{remaining - j, j};
      const std::vector<int> smaller{remaining - j + 1, j - 1};
      chain.check(ChainSide::Lower, true, larger, smaller);
      if (!prefix.empty()) chain.check(ChainSide::Lower, false, concat(prefix, larger), concat(prefix, smaller));
    }
    prefix.push_back(b);
    remaining -= b;
  }

  // Upper chain: factors before t already raised to c_1 powers.
  std::vector<int> raised;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const int l = parts[t];
    const std::vector<int> rest(parts.begin() + static_cast<std::ptrdiff_t>(t) + 1, parts.end());
    const std::vector<int> others = concat(raised, rest);
    for (int s = 1; s < l; ++s) {
      std::vector<int> larger{l - s};
      std::vector<int> smaller{l - s + 1};
      larger.insert(larger.end(), static_cast<std::size_t>(s), 1);
      smaller.insert(smaller.end(), static_cast<std::size_t>(s - 1), 1);
      chain.check(ChainSide::Upper, true, larger, smaller);
      if (!others.empty()) chain.check(ChainSide::Upper, false, concat(others, larger), concat(others, smaller));
    }
    raised.insert(raised.end(), static_cast<std::size_t>(l), 1);
  }

  if (i == cs.base_dim()) {
    TopComparison top;
    top.c_n = top_coefficient(cs.c(i)).real_d();
    top.c_lambda = top_coefficient(chain.product(parts)).real_d();
    top.c1_n = top_coefficient(chain.product(std::vector<int>(static_cast<std::size_t>(i), 1))).real_d();
    // Relative to the values and to the coefficient sizes whose products are
    // summed; exact zeros (e.g. c_n for r < n) otherwise leave only rounding.
    double lambda_terms = 1.0;
    for (int part : parts) lambda_terms *= cs.c(part).max_abs_coefficient();
    const double c1_terms = std::pow(cs.c(1).max_abs_coefficient(), i);
    top.scale = std::max({std::abs(top.c_n), std::abs(top.c_lambda), std::abs(top.c1_n),
                          cs.c(i).max_abs_coefficient(), lambda_terms, c1_terms,
                          std::numeric_limits<double>::min()});
    const double slack = options.tol * top.scale;
    top.pass = top.c_n >= -slack && top.c_lambda - top.c_n >= -slack && top.c1_n - top.c_lambda >= -slack;
    report.pass = report.pass && top.pass;
    report.top = top;
  }
  return report;
}

}  // namespace chernform
