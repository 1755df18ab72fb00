#include "chernform/chern.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "chernform/errors.hpp"
#include "chernform/schur.hpp"

namespace chernform {

ChernFormSet::ChernFormSet(int base_dim, int rank, std::vector<Form> forms, PrefactorMode prefactor,
                           bool witnessed)
    : n_(base_dim), r_(rank), forms_(std::move(forms)), prefactor_(prefactor), witnessed_(witnessed) {
  if (forms_.empty()) throw InvalidInput("ChernFormSet: c_0 is required");
  if (top_degree() > std::min(n_, r_)) throw InvalidInput("ChernFormSet: too many forms");
  for (int i = 0; i <= top_degree(); ++i)
    if (!forms_[static_cast<std::size_t>(i)].is_homogeneous(i, i))
      throw InvalidInput("ChernFormSet: c_" + std::to_string(i) + " is not an (i,i)-form");
}

Form ChernFormSet::c(int i) const {
  if (i < 0 || i > top_degree()) return Form(n_, mode());
  return forms_[static_cast<std::size_t>(i)];
}

double ChernFormSet::normalization(int degree) const {
  if (prefactor_ == PrefactorMode::Numeric) return 1.0;
  return std::pow(2.0 * std::numbers::pi, -degree);
}

ChernFormSet ChernFormSet::to_numeric() const {
  if (prefactor_ == PrefactorMode::Numeric && mode() == ScalarMode::Float) return *this;
  std::vector<Form> out;
  out.reserve(forms_.size());
  for (int i = 0; i <= top_degree(); ++i) {
    const double factor = normalization(i);
    out.push_back(forms_[static_cast<std::size_t>(i)].to_mode(ScalarMode::Float) *
                  Scalar(std::complex<double>(factor, 0.0)));
  }
  return ChernFormSet(n_, r_, std::move(out), PrefactorMode::Numeric, witnessed_);
}

namespace {

// Sum of all principal minors of size `size` of omega (as forms).
Form principal_minor_sum(const CurvatureMatrix& omega, int size) {
  const int r = omega.rank();
  Form total(omega.base_dim(), omega.mode());
  std::vector<int> rows;
  std::vector<int> perm;
  for (unsigned subset = 0; subset < (1U << r); ++subset) {
    if (std::popcount(subset) != size) continue;
    rows.clear();
    for (int k = 0; k < r; ++k)
      if ((subset >> k) & 1U) rows.push_back(k);
    perm.resize(rows.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inversions;
      Form term = omega.at(rows[0], rows[static_cast<std::size_t>(perm[0])]);
      for (std::size_t a = 1; a < perm.size() && !term.is_zero(); ++a)
        term = wedge(term, omega.at(rows[a], rows[static_cast<std::size_t>(perm[a])]));
      if ((inversions & 1) != 0) {
        total -= term;
      } else {
        total += term;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

}  // namespace

ChernFormSet chern_forms(const CurvatureMatrix& omega, PrefactorMode prefactor) {
  const int n = omega.base_dim();
  const int k = std::min(n, omega.rank());
  const CurvatureMatrix source =
      prefactor == PrefactorMode::Numeric ? omega.to_mode(ScalarMode::Float) : omega;
  const ScalarMode mode = source.mode();

  Scalar unit = Scalar::imag_unit(mode);
  if (prefactor == PrefactorMode::Numeric) unit *= Scalar(std::complex<double>(0.5 / std::numbers::pi, 0.0));

  std::vector<Form> forms;
  forms.reserve(static_cast<std::size_t>(k + 1));
  forms.push_back(Form::one(n, mode));
  for (int i = 1; i <= k; ++i) forms.push_back(principal_minor_sum(source, i) * unit.pow(static_cast<unsigned>(i)));
  return ChernFormSet(n, omega.rank(), std::move(forms), prefactor, omega.witnessed());
}

Form chern_product(const ChernFormSet& cs, const Partition& lambda) {
  if (lambda.weight() > cs.base_dim())
    throw InvalidInput("chern_product: partition weight " + std::to_string(lambda.weight()) +
                       " exceeds base_dim " + std::to_string(cs.base_dim()));
  if (!lambda.parts().empty() && lambda.parts().front() > cs.rank())
    throw InvalidInput("chern_product: partition part exceeds rank " + std::to_string(cs.rank()));
  Form out = Form::one(cs.base_dim(), cs.mode());
  for (int part : lambda.parts()) {
    if (part == 0) continue;
    out = wedge(out, cs.c(part));
  }
  return out;
}

Form volume_element(int base_dim, ScalarMode mode) {
  const std::uint16_t full = static_cast<std::uint16_t>((1U << base_dim) - 1U);
  const unsigned exponent = static_cast<unsigned>(base_dim * base_dim);
  return Form::monomial(base_dim, Monomial{full, full}, Scalar::imag_unit(mode).pow(exponent));
}

Scalar top_coefficient(const Form& phi) {
  const int n = phi.base_dim();
  if (!phi.is_homogeneous(n, n))
    throw InvalidInput("top_coefficient: form is not of bidegree (" + std::to_string(n) + "," +
                       std::to_string(n) + ")");
  const std::uint16_t full = static_cast<std::uint16_t>((1U << n) - 1U);
  const unsigned exponent = static_cast<unsigned>(n * n);
  Scalar value = phi.coefficient(Monomial{full, full}) /
                 Scalar::imag_unit(phi.mode()).pow(exponent);
  const bool real = value.is_exact() ? sgn(value.exact().im()) == 0
                                     : std::abs(value.imag_d()) <= 1e-10 * phi.scale();
  if (!real) throw InvalidInput("top_coefficient: coefficient is not real: " + value.to_string());
  if (value.is_exact()) return Scalar(GaussianRational(value.exact().re()));
  return Scalar(std::complex<double>(value.real_d(), 0.0));
}

}  // namespace chernform
