#include "chernform/models.hpp"

#include <algorithm>
#include <cctype>

#include "chernform/errors.hpp"

namespace chernform {

namespace {

std::vector<int> generator_bounds_of(const std::vector<Factor>& factors) {
  std::vector<int> bounds;
  for (const Factor& f : factors)
    if (const auto* p = std::get_if<ProjectiveFactor>(&f)) bounds.push_back(p->k);
  return bounds;
}

int dimension_of(const std::vector<Factor>& factors) {
  int d = 0;
  for (const Factor& f : factors) d += std::visit([](const auto& x) { return x.k; }, f);
  return d;
}

// Re-indexes an element of a ring with `from` generators into one with
// `total` generators, placing them starting at `offset`.
RingElement lift(const RingElement& e, int total, int offset) {
  RingElement out(total);
  for (const auto& [exps, c] : e.terms()) {
    RingElement::Exponents lifted(static_cast<std::size_t>(total), 0);
    std::copy(exps.begin(), exps.end(), lifted.begin() + offset);
    out.add_term(std::move(lifted), c);
  }
  return out;
}

}  // namespace

ModelManifold::ModelManifold(std::vector<Factor> factors, std::vector<RingElement> tangent_chern,
                             std::string label, bool tangent_globally_generated,
                             bool cotangent_globally_generated)
    : dim_(dimension_of(factors)), factors_(std::move(factors)), bounds_(generator_bounds_of(factors_)),
      tangent_chern_(std::move(tangent_chern)), label_(std::move(label)),
      tangent_gg_(tangent_globally_generated), cotangent_gg_(cotangent_globally_generated) {
  for (const Factor& f : factors_)
    if (std::visit([](const auto& x) { return x.k; }, f) < 1)
      throw InvalidInput("ModelManifold: factor dimensions must be positive");
  if (static_cast<int>(tangent_chern_.size()) != dim_)
    throw InvalidInput("ModelManifold: expected " + std::to_string(dim_) + " tangent Chern classes");
  for (std::size_t j = 0; j < tangent_chern_.size(); ++j) {
    if (tangent_chern_[j].num_vars() != num_generators())
      throw InvalidInput("ModelManifold: tangent class in the wrong ring");
    tangent_chern_[j] = reduce(tangent_chern_[j]);
    const int d = homogeneous_degree(tangent_chern_[j]);
    if (d != -1 && d != static_cast<int>(j) + 1)
      throw InvalidInput("ModelManifold: c_" + std::to_string(j + 1) + " has the wrong degree");
  }
}

RingElement ModelManifold::tangent_class(int j) const {
  if (j == 0) return one();
  if (j < 0 || j > dim_) return zero();
  return tangent_chern_[static_cast<std::size_t>(j - 1)];
}

RingElement ModelManifold::reduce(const RingElement& e) const {
  if (e.num_vars() != num_generators()) throw InvalidInput("ModelManifold: element in the wrong ring");
  RingElement out(num_generators());
  for (const auto& [exps, c] : e.terms()) {
    bool survives = true;
    for (std::size_t k = 0; k < exps.size(); ++k) survives = survives && exps[k] <= bounds_[k];
    if (survives) out.add_term(exps, c);
  }
  return out;
}

RingElement ModelManifold::multiply(const RingElement& a, const RingElement& b) const {
  return reduce(a * b);
}

mpq_class ModelManifold::integrate(const RingElement& e) const {
  for (const Factor& f : factors_)
    if (std::holds_alternative<TorusFactor>(f)) return 0;
  return reduce(e).coefficient(bounds_);
}

int ModelManifold::homogeneous_degree(const RingElement& e) {
  int degree = -1;
  for (const auto& [exps, c] : e.terms()) {
    int d = 0;
    for (int v : exps) d += v;
    if (degree == -1) {
      degree = d;
    } else if (degree != d) {
      return -2;
    }
  }
  return degree;
}

ModelManifold point() { return ModelManifold({}, {}, "pt", true, true); }

ModelManifold projective_space(int k) {
  if (k < 1) throw InvalidInput("projective_space: k must be >= 1");
  std::vector<RingElement> classes;
  mpz_class binom = 1;  // C(k+1, j)
  for (int j = 1; j <= k; ++j) {
    binom = binom * (k + 2 - j) / j;
    RingElement c(1);
    c.add_term({j}, mpq_class(binom));
    classes.push_back(std::move(c));
  }
  return ModelManifold({ProjectiveFactor{k}}, std::move(classes), "CP" + std::to_string(k), true, false);
}

ModelManifold complex_torus(int k) {
  if (k < 1) throw InvalidInput("complex_torus: k must be >= 1");
  return ModelManifold({TorusFactor{k}}, std::vector<RingElement>(static_cast<std::size_t>(k), RingElement(0)),
                       "T" + std::to_string(k), true, true);
}

ModelManifold product(const ModelManifold& a, const ModelManifold& b) {
  if (a.factors().empty()) return b;
  if (b.factors().empty()) return a;
  std::vector<Factor> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  const int total = a.num_generators() + b.num_generators();
  const int dim = a.dim() + b.dim();
  // c(M x N) = c(M) c(N), graded piece by piece.
  std::vector<RingElement> classes;
  for (int j = 1; j <= dim; ++j) {
    RingElement cj(total);
    for (int s = 0; s <= j; ++s)
      cj += lift(a.tangent_class(s), total, 0) * lift(b.tangent_class(j - s), total, a.num_generators());
    classes.push_back(std::move(cj));
  }
  return ModelManifold(std::move(factors), std::move(classes), a.label() + "x" + b.label(),
                       a.tangent_globally_generated() && b.tangent_globally_generated(),
                       a.cotangent_globally_generated() && b.cotangent_globally_generated());
}

ModelManifold parse_model(const std::string& text) {
  if (text.empty()) throw InvalidInput("model: empty expression");
  std::optional<ModelManifold> result;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string::npos) end = text.size();
    const std::string atom = text.substr(start, end - start);
    start = end + 1;
    if (atom == "pt") {
      result = result ? product(*result, point()) : point();
      continue;
    }
    std::string digits;
    bool projective = false;
    if (atom.rfind("CP", 0) == 0) {
      projective = true;
      digits = atom.substr(2);
    } else if (atom.rfind("T", 0) == 0) {
      digits = atom.substr(1);
    } else {
      throw InvalidInput("model: unknown atom '" + atom + "' (expected CPk, Tk or pt)");
    }
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw InvalidInput("model: bad dimension in atom '" + atom + "'");
    const int k = std::stoi(digits);
    ModelManifold factor = projective ? projective_space(k) : complex_torus(k);
    result = result ? product(*result, factor) : factor;
  }
  return *result;
}

std::vector<RingElement> dual_tangent_chern(const ModelManifold& m) {
  std::vector<RingElement> out = m.tangent_chern();
  for (std::size_t j = 0; j < out.size(); ++j)
    if (j % 2 == 0) out[j] = -out[j];  // index j holds c_{j+1}
  return out;
}

mpz_class chern_number(const ModelManifold& m, const Partition& lambda,
                       const std::vector<RingElement>* classes) {
  if (lambda.weight() != m.dim())
    throw InvalidInput("chern_number: partition weight " + std::to_string(lambda.weight()) +
                       " does not match dimension " + std::to_string(m.dim()));
  const std::vector<RingElement>& cs = classes ? *classes : m.tangent_chern();
  if (static_cast<int>(cs.size()) != m.dim()) throw InvalidInput("chern_number: wrong number of classes");
  RingElement prod = m.one();
  for (int part : lambda.parts()) {
    if (part == 0) continue;
    if (part > m.dim()) return 0;
    prod = m.multiply(prod, cs[static_cast<std::size_t>(part - 1)]);
  }
  const mpq_class value = m.integrate(prod);
  if (value.get_den() != 1) throw ConsistencyError("chern_number: non-integral value " + value.get_str());
  return value.get_num();
}

NumberBoundsReport verify_number_bounds(const ModelManifold& m, bool use_signed) {
  if (m.dim() < 1) throw InvalidInput("verify_number_bounds: model must have positive dimension");
  if (!use_signed && !m.tangent_globally_generated())
    throw InvalidInput("verify_number_bounds: " + m.label() + " is not flagged as having a globally generated tangent bundle");
  if (use_signed && !m.cotangent_globally_generated())
    throw InvalidInput("verify_number_bounds: " + m.label() + " is not flagged as having a globally generated cotangent bundle");

  const int n = m.dim();
  const std::vector<RingElement> duals = dual_tangent_chern(m);
  const std::vector<RingElement>* classes = use_signed ? &duals : nullptr;

  NumberBoundsReport report;
  report.is_signed = use_signed;
  std::vector<int> top(static_cast<std::size_t>(n), 0);
  top[0] = n;
  report.lower = chern_number(m, Partition(top, n), classes);
  report.upper = chern_number(m, Partition(std::vector<int>(static_cast<std::size_t>(n), 1), n), classes);
  report.ordering_pass = report.lower >= 0;
  for (const Partition& lambda : partitions(n, n)) {
    const mpz_class value = chern_number(m, lambda, classes);
    report.ordering_pass = report.ordering_pass && report.lower <= value && value <= report.upper;
    report.numbers.emplace_back(lambda, value);
  }
  report.vanishing_applies = report.upper == 0;
  if (report.vanishing_applies)
    for (const auto& [lambda, value] : report.numbers) report.vanishing_pass = report.vanishing_pass && value == 0;
  report.pass = report.ordering_pass && report.vanishing_pass;
  return report;
}

mpq_class kodaira_leading(const ModelManifold& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  const mpz_class c1n = chern_number(m, Partition(std::vector<int>(static_cast<std::size_t>(n), 1), n));
  mpz_class factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  mpq_class out(n % 2 == 0 ? c1n : mpz_class(-c1n), factorial);
  out.canonicalize();
  return out;
}

RingElement parse_line(const ModelManifold& m, const std::string& text) {
  if (text == "K") return -m.tangent_class(1);
  if (text.size() < 4 || text.rfind("O(", 0) != 0 || text.back() != ')')
    throw InvalidInput("line: expected K, O(d) or O(d1,...,df), got '" + text + "'");
  std::vector<long> degrees;
  std::string body = text.substr(2, text.size() - 3);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string::npos) end = body.size();
    const std::string token = body.substr(start, end - start);
    std::size_t used = 0;
    long d = 0;
    try {
      d = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) throw InvalidInput("line: bad degree '" + token + "'");
    degrees.push_back(d);
    start = end + 1;
  }
  const int f = m.num_generators();
  if (degrees.size() == 1) degrees.assign(static_cast<std::size_t>(f), degrees.front());
  if (static_cast<int>(degrees.size()) != f)
    throw InvalidInput("line: " + m.label() + " has " + std::to_string(f) + " projective factors, got " +
                       std::to_string(degrees.size()) + " degrees");
  RingElement out = m.zero();
  for (int j = 0; j < f; ++j) out += m.generator(j) * mpq_class(degrees[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace chernform
