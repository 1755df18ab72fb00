#include "chernform/form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "chernform/errors.hpp"
#include "chernform/scalar_matrix.hpp"

namespace chernform {

int Monomial::p() const { return std::popcount(static_cast<unsigned>(dz)); }
int Monomial::q() const { return std::popcount(static_cast<unsigned>(dzbar)); }

namespace {

void check_base_dim(int n) {
  if (n < 1 || n > kMaxBaseDim)
    throw InvalidInput("Form: base_dim must be in 1.." + std::to_string(kMaxBaseDim) + ", got " +
                       std::to_string(n));
}

std::uint16_t mask_from_indices(int n, const std::vector<int>& idx, const char* family) {
  std::uint16_t mask = 0;
  int prev = 0;
  for (int k : idx) {
    if (k < 1 || k > n)
      throw InvalidInput(std::string("monomial: ") + family + " index " + std::to_string(k) +
                         " out of range 1.." + std::to_string(n));
    if (k <= prev)
      throw InvalidInput(std::string("monomial: ") + family + " indices must be strictly increasing");
    mask = static_cast<std::uint16_t>(mask | (1U << (k - 1)));
    prev = k;
  }
  return mask;
}

// Parity of the number of pairs (a in left, b in right) with a > b, i.e. the
// transpositions needed to sort left-then-right into increasing order.
int merge_parity(unsigned left, unsigned right) {
  int count = 0;
  while (right != 0) {
    const int b = std::countr_zero(right);
    right &= right - 1;
    count += std::popcount(left >> (b + 1));
  }
  return count & 1;
}

std::vector<int> mask_indices(unsigned mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Monomial make_monomial(int n, const std::vector<int>& dz, const std::vector<int>& dzbar) {
  check_base_dim(n);
  return {mask_from_indices(n, dz, "dz"), mask_from_indices(n, dzbar, "dzbar")};
}

Form::Form(int base_dim, ScalarMode mode) : n_(base_dim), mode_(mode) { check_base_dim(base_dim); }

Form Form::constant(int base_dim, const Scalar& value) {
  Form f(base_dim, value.mode());
  f.add_term({}, value);
  return f;
}

Form Form::one(int base_dim, ScalarMode mode) { return constant(base_dim, Scalar::one(mode)); }

Form Form::dz(int base_dim, int index, ScalarMode mode) {
  return monomial(base_dim, make_monomial(base_dim, {index}, {}), Scalar::one(mode));
}

Form Form::dzbar(int base_dim, int index, ScalarMode mode) {
  return monomial(base_dim, make_monomial(base_dim, {}, {index}), Scalar::one(mode));
}

Form Form::monomial(int base_dim, Monomial m, const Scalar& coefficient) {
  Form f(base_dim, coefficient.mode());
  const unsigned limit = 1U << base_dim;
  if (m.dz >= limit || m.dzbar >= limit) throw InvalidInput("Form::monomial: index exceeds base_dim");
  f.add_term(m, coefficient);
  return f;
}

Scalar Form::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

void Form::add_term(Monomial m, const Scalar& c) {
  require_same_mode(mode_, c.mode(), "Form::add_term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Form::is_homogeneous(int p, int q) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.p() == p && t.first.q() == q; });
}

std::pair<int, int> Form::leading_bidegree() const {
  if (terms_.empty()) return {-1, -1};
  const Monomial& m = terms_.begin()->first;
  return {m.p(), m.q()};
}

double Form::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [m, c] : terms_) best = std::max(best, c.abs());
  return best;
}

double Form::scale() const { return std::max(1.0, max_abs_coefficient()); }

Form Form::to_mode(ScalarMode mode) const {
  Form out(n_, mode);
  for (const auto& [m, c] : terms_) out.add_term(m, c.to_mode(mode));
  return out;
}

void Form::check_compatible(const Form& o, const char* where) const {
  if (n_ != o.n_)
    throw InvalidInput(std::string(where) + ": base_dim mismatch (" + std::to_string(n_) + " vs " +
                       std::to_string(o.n_) + ")");
  require_same_mode(mode_, o.mode_, where);
}

Form& Form::operator+=(const Form& o) {
  check_compatible(o, "Form +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_compatible(o, "Form -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& s) {
  require_same_mode(mode_, s.mode(), "Form *");
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Form& a, const Form& b) {
  return a.n_ == b.n_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
}

double max_abs_difference(const Form& a, const Form& b) {
  a.check_compatible(b, "max_abs_difference");
  return (a - b).max_abs_coefficient();
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int k : mask_indices(m.dz)) os << "*dz" << k + 1;
    for (int k : mask_indices(m.dzbar)) os << "*dzbar" << k + 1;
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.base_dim() != b.base_dim())
    throw InvalidInput("wedge: base_dim mismatch (" + std::to_string(a.base_dim()) + " vs " +
                       std::to_string(b.base_dim()) + ")");
  require_same_mode(a.mode(), b.mode(), "wedge");
  Form out(a.base_dim(), a.mode());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma.dz & mb.dz) != 0 || (ma.dzbar & mb.dzbar) != 0) continue;
      // dz^Ha dzbar^Aa dz^Hb dzbar^Ab: move dz^Hb left past dzbar^Aa, then
      // merge each family.
      int parity = (ma.q() * mb.p()) & 1;
      parity ^= merge_parity(ma.dz, mb.dz);
      parity ^= merge_parity(ma.dzbar, mb.dzbar);
      const Monomial m{static_cast<std::uint16_t>(ma.dz | mb.dz),
                       static_cast<std::uint16_t>(ma.dzbar | mb.dzbar)};
      Scalar c = ca * cb;
      out.add_term(m, parity != 0 ? -c : c);
    }
  }
  return out;
}

Form conjugate(const Form& a) {
  Form out(a.base_dim(), a.mode());
  for (const auto& [m, c] : a.terms()) {
    // conj(dz^H ^ dzbar^A) = dzbar^H ^ dz^A = (-1)^{|H||A|} dz^A ^ dzbar^H
    const Scalar cc = c.conj();
    out.add_term({m.dzbar, m.dz}, ((m.p() * m.q()) & 1) != 0 ? -cc : cc);
  }
  return out;
}

namespace {

void check_evaluation_input(const Form& phi, std::size_t count, int& p) {
  if (phi.is_zero()) {
    p = static_cast<int>(count);
    return;
  }
  p = phi.leading_bidegree().first;
  if (!phi.is_homogeneous(p, p))
    throw InvalidInput("evaluate: form is not homogeneous of bidegree (p,p)");
  if (count != static_cast<std::size_t>(p))
    throw InvalidInput("evaluate: expected " + std::to_string(p) + " tangent vectors, got " +
                       std::to_string(count));
}

// (-i)^(p^2): p^2 mod 4 is 0 for even p and 1 for odd p.
bool minus_i_power_is_one(int p) { return (p % 2) == 0; }

template <class T, class Get>
T minor_det(unsigned mask, int p, Get get, std::vector<T>& scratch) {
  // Leibniz-free elimination on a p x p matrix built from rows in `mask`.
  const std::vector<int> rows = mask_indices(mask);
  scratch.assign(static_cast<std::size_t>(p * p), T{});
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) scratch[a * p + b] = get(b, rows[a]);
  T det = T{1.0};
  for (int col = 0; col < p; ++col) {
    int piv = -1;
    double best = 0.0;
    for (int i = col; i < p; ++i) {
      const double v = std::abs(scratch[i * p + col]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv < 0) return T{0.0};
    if (piv != col) {
      for (int j = 0; j < p; ++j) std::swap(scratch[piv * p + j], scratch[col * p + j]);
      det = -det;
    }
    const T pv = scratch[col * p + col];
    det *= pv;
    for (int i = col + 1; i < p; ++i) {
      const T f = scratch[i * p + col] / pv;
      for (int j = col; j < p; ++j) scratch[i * p + j] -= f * scratch[col * p + j];
    }
  }
  return det;
}

}  // namespace

Scalar evaluate(const Form& phi, std::span<const TangentVector> vectors) {
  int p = 0;
  check_evaluation_input(phi, vectors.size(), p);
  const ScalarMode mode = phi.mode();
  for (const auto& v : vectors) {
    if (v.size() != static_cast<std::size_t>(phi.base_dim()))
      throw InvalidInput("evaluate: tangent vector length " + std::to_string(v.size()) +
                         " does not match base_dim " + std::to_string(phi.base_dim()));
    for (const auto& s : v) require_same_mode(mode, s.mode(), "evaluate");
  }
  if (phi.is_zero()) return Scalar::zero(mode);

  std::map<unsigned, Scalar> dets;
  auto det_of = [&](unsigned mask) -> const Scalar& {
    auto it = dets.find(mask);
    if (it != dets.end()) return it->second;
    const std::vector<int> rows = mask_indices(mask);
    ScalarMatrix m(static_cast<std::size_t>(p), static_cast<std::size_t>(p), mode);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) m(a, b) = vectors[b][rows[a]];
    return dets.emplace(mask, determinant(std::move(m))).first->second;
  };

  Scalar total = Scalar::zero(mode);
  for (const auto& [m, c] : phi.terms()) total += c * det_of(m.dz) * det_of(m.dzbar).conj();
  if (!minus_i_power_is_one(p)) total *= -Scalar::imag_unit(mode);
  return total;
}

std::complex<double> evaluate_float(const Form& phi,
                                    std::span<const std::vector<std::complex<double>>> vectors) {
  int p = 0;
  check_evaluation_input(phi, vectors.size(), p);
  for (const auto& v : vectors)
    if (v.size() != static_cast<std::size_t>(phi.base_dim()))
      throw InvalidInput("evaluate: tangent vector length does not match base_dim");
  if (phi.is_zero()) return {0.0, 0.0};
  using C = std::complex<double>;
  std::vector<C> scratch;
  std::map<unsigned, C> dets;
  auto get = [&](int b, int row) { return vectors[b][row]; };
  auto det_of = [&](unsigned mask) {
    auto it = dets.find(mask);
    if (it != dets.end()) return it->second;
    const C d = minor_det<C>(mask, p, get, scratch);
    dets.emplace(mask, d);
    return d;
  };
  C total{0.0, 0.0};
  for (const auto& [m, c] : phi.terms()) total += c.to_complex() * det_of(m.dz) * std::conj(det_of(m.dzbar));
  if (!minus_i_power_is_one(p)) total *= C{0.0, -1.0};
  return total;
}

}  // namespace chernform
