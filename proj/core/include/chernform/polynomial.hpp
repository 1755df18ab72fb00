#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chernform/errors.hpp"

namespace chernform {

/// Sparse commutative polynomial with exact coefficients (mpz_class or
/// mpq_class), keyed by exponent vectors of fixed length.
template <class Coeff>
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Coeff>;

  explicit Polynomial(int num_vars = 0) : nvars_(num_vars) {}

  static Polynomial constant(int num_vars, const Coeff& c) {
    Polynomial p(num_vars);
    p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
    return p;
  }
  /// The variable with 0-based index `var`.
  static Polynomial variable(int num_vars, int var) {
    Exponents e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(var)) = 1;
    Polynomial p(num_vars);
    p.add_term(std::move(e), Coeff(1));
    return p;
  }

  int num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponents e, const Coeff& c) {
    if (static_cast<int>(e.size()) != nvars_) throw InvalidInput("Polynomial: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// sum_k weights[k] * e[k]
  static int weighted_degree(const Exponents& e, const std::vector<int>& weights) {
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += weights[k] * e[k];
    return d;
  }

  /// Drops every term whose weighted degree exceeds `max_degree`.
  Polynomial truncated(const std::vector<int>& weights, int max_degree) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (weighted_degree(e, weights) <= max_degree) out.terms_.emplace(e, c);
    return out;
  }

  /// Terms of weighted degree exactly `degree`.
  Polynomial homogeneous_part(const std::vector<int>& weights, int degree) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (weighted_degree(e, weights) == degree) out.terms_.emplace(e, c);
    return out;
  }

  /// Human-readable expansion, e.g. "c1^2 - c2". `names[k]` names variable k.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent vectors first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Coeff c = it->second;
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool constant = true;
      for (int v : it->first) constant = constant && v == 0;
      if (constant || c != 1) {
        os << c;
        if (!constant) os << "*";
      }
      bool first_factor = true;
      for (std::size_t k = 0; k < it->first.size(); ++k) {
        if (it->first[k] == 0) continue;
        if (!first_factor) os << "*";
        first_factor = false;
        os << names[k];
        if (it->first[k] > 1) os << "^" << it->first[k];
      }
    }
    return os.str();
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw InvalidInput("Polynomial: variable count mismatch");
  }

  int nvars_;
  Terms terms_;
};

/// Substitutes values[k] for variable k and expands with the caller's ring
/// operations. `lift(coeff)` embeds a coefficient; `one` is the unit.
template <class Coeff, class Value, class Lift, class Multiply>
Value substitute(const Polynomial<Coeff>& poly, const std::vector<Value>& values, const Value& zero,
                 const Value& one, Lift lift, Multiply multiply) {
  if (static_cast<int>(values.size()) != poly.num_vars())
    throw InvalidInput("substitute: expected " + std::to_string(poly.num_vars()) + " values");
  // Cache powers per variable.
  std::vector<std::vector<Value>> powers(values.size());
  auto power = [&](std::size_t var, int e) -> const Value& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(one);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(multiply(cache.back(), values[var]));
    return cache[static_cast<std::size_t>(e)];
  };
  Value total = zero;
  for (const auto& [e, c] : poly.terms()) {
    Value term = lift(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term = multiply(term, power(k, e[k]));
    total = total + term;
  }
  return total;
}

}  // namespace chernform
