#include "chernform/schur.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "chernform/errors.hpp"

namespace chernform {

Partition::Partition(std::vector<int> parts, int bound) : parts_(std::move(parts)), bound_(bound) {
  if (bound < 1) throw InvalidInput("Partition: bound must be positive");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw InvalidInput("Partition: parts must be nonnegative");
    if (parts_[k] > bound) throw InvalidInput("Partition: part " + std::to_string(parts_[k]) +
                                              " exceeds bound " + std::to_string(bound));
    if (k > 0 && parts_[k] > parts_[k - 1]) throw InvalidInput("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::trimmed() const {
  std::vector<int> out;
  for (int v : parts_)
    if (v != 0) out.push_back(v);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  const auto parts = trimmed();
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << ")";
  return os.str();
}

Partition Partition::parse(const std::string& text, int bound) {
  std::vector<int> parts;
  std::string token;
  for (char ch : text + ",") {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      if (!token.empty()) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size()) throw InvalidInput("Partition: bad part '" + token + "'");
        parts.push_back(v);
      }
      token.clear();
      continue;
    }
    token.push_back(ch);
  }
  Partition probe(parts, bound);
  const int w = probe.weight();
  while (static_cast<int>(parts.size()) > w && !parts.empty() && parts.back() == 0) parts.pop_back();
  parts.resize(static_cast<std::size_t>(std::max<int>(w, static_cast<int>(parts.size()))), 0);
  return Partition(std::move(parts), bound);
}

std::vector<Partition> partitions(int weight, int bound) {
  if (weight < 1 || bound < 1) throw InvalidInput("partitions: weight and bound must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      std::vector<int> parts = current;
      parts.resize(static_cast<std::size_t>(weight), 0);
      out.emplace_back(std::move(parts), bound);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(weight, bound);
  return out;
}

std::vector<int> chern_weights(int r) {
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

std::vector<std::string> chern_names(int r) {
  std::vector<std::string> names;
  for (int j = 1; j <= r; ++j) names.push_back("c" + std::to_string(j));
  return names;
}

ChernPolynomial chern_variable(int j, int r) {
  if (j == 0) return ChernPolynomial::constant(r, 1);
  if (j < 0 || j > r) return ChernPolynomial(r);
  return ChernPolynomial::variable(r, j - 1);
}

ChernPolynomial schur_polynomial(const Partition& lambda, int r) {
  if (r < 1) throw InvalidInput("schur_polynomial: r must be positive");
  const auto& parts = lambda.parts();
  const int size = lambda.length();
  if (size == 0) return ChernPolynomial::constant(r, 1);
  if (size > 20) throw InvalidInput("schur_polynomial: partition too long");

  auto entry = [&](int row, int col) { return chern_variable(parts[static_cast<std::size_t>(row)] - row + col, r); };

  // Laplace expansion along successive rows, memoized on the set of columns
  // still available.
  std::unordered_map<unsigned, ChernPolynomial> memo;
  std::function<ChernPolynomial(unsigned)> minor = [&](unsigned columns) -> ChernPolynomial {
    if (columns == 0) return ChernPolynomial::constant(r, 1);
    if (auto it = memo.find(columns); it != memo.end()) return it->second;
    const int row = size - std::popcount(columns);
    ChernPolynomial total(r);
    int position = 0;
    for (int col = 0; col < size; ++col) {
      if (((columns >> col) & 1U) == 0) continue;
      const ChernPolynomial e = entry(row, col);
      if (!e.is_zero()) {
        ChernPolynomial term = e * minor(columns & ~(1U << col));
        if (position % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      ++position;
    }
    memo.emplace(columns, total);
    return total;
  };
  return minor((1U << size) - 1U);
}

Form evaluate_on_forms(const ChernPolynomial& poly, const ChernFormSet& cs) {
  if (poly.num_vars() > cs.rank())
    throw InvalidInput("evaluate_on_forms: polynomial uses more Chern variables than the rank");
  std::vector<Form> values;
  for (int j = 1; j <= poly.num_vars(); ++j) values.push_back(cs.c(j));
  const ScalarMode mode = cs.mode();
  const int n = cs.base_dim();
  return substitute(
      poly, values, Form(n, mode), Form::one(n, mode),
      [&](const mpz_class& c) {
        return Form::constant(n, Scalar(GaussianRational(mpq_class(c))).to_mode(mode));
      },
      [](const Form& a, const Form& b) { return wedge(a, b); });
}

SchurReport verify_schur_nonnegativity(const ChernFormSet& cs, int min_degree, int max_degree,
                                       const SamplingOptions& options) {
  const ChernFormSet numeric = cs.to_numeric();
  const int lo = std::max(1, min_degree);
  const int hi = std::min(max_degree, cs.base_dim());
  SchurReport report;
  std::uint64_t index = 0;
  for (int i = lo; i <= hi; ++i) {
    for (const Partition& lambda : partitions(i, cs.rank())) {
      const Form form = evaluate_on_forms(schur_polynomial(lambda, cs.rank()), numeric);
      SamplingOptions local = options;
      local.seed = stream_seed(options.seed, index++);
      SchurEntry entry{i, lambda, nonnegative_sampled(form, local)};
      report.pass = report.pass && entry.verdict.pass;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

SchurReport verify_schur_nonnegativity(const CurvatureTensor& instance, int min_degree,
                                       int max_degree, const SamplingOptions& options) {
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(instance));
  return verify_schur_nonnegativity(chern_forms(omega, PrefactorMode::Numeric), min_degree,
                                    max_degree, options);
}

}  // namespace chernform
