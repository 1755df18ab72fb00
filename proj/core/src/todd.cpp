#include "chernform/models.hpp"

#include "chernform/errors.hpp"

namespace chernform {

namespace {

inline constexpr int kMaxToddDim = 8;

// Coefficients of (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!.
std::vector<mpq_class> todd_denominator(int order) {
  std::vector<mpq_class> g(static_cast<std::size_t>(order + 1));
  mpz_class factorial = 1;
  for (int k = 0; k <= order; ++k) {
    factorial *= k + 1;
    g[static_cast<std::size_t>(k)] = mpq_class(k % 2 == 0 ? 1 : -1, 1) / mpq_class(factorial);
  }
  return g;
}

}  // namespace

std::vector<mpq_class> todd_series(int order) {
  // f = 1 / g by recursive series inversion (g_0 = 1).
  const std::vector<mpq_class> g = todd_denominator(order);
  std::vector<mpq_class> f(static_cast<std::size_t>(order + 1));
  f[0] = 1;
  for (int k = 1; k <= order; ++k) {
    mpq_class s = 0;
    for (int j = 1; j <= k; ++j) s += g[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(k - j)];
    f[static_cast<std::size_t>(k)] = -s;
  }
  return f;
}

RingElement todd_polynomial(int n) {
  if (n < 0 || n > kMaxToddDim)
    throw InvalidInput("todd_polynomial: dimension must be in 0.." + std::to_string(kMaxToddDim));
  if (n == 0) return RingElement::constant(0, 1);

  const std::vector<mpq_class> f = todd_series(n);
  const std::vector<mpq_class> g = todd_denominator(n);
  // log f = sum a_k x^k with k a_k = [x^{k-1}] f'/f = [x^{k-1}] f' g.
  std::vector<mpq_class> log_coeffs(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) {
    mpq_class s = 0;
    for (int j = 1; j <= k; ++j) s += mpq_class(j) * f[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
    log_coeffs[static_cast<std::size_t>(k)] = s / k;
  }

  const std::vector<int> weights = chern_weights(n);
  auto elementary = [&](int j) { return RingElement::variable(n, j - 1); };

  // Newton: p_k = sum_{j<k} (-1)^{j-1} e_j p_{k-j} + (-1)^{k-1} k e_k.
  std::vector<RingElement> power_sums(static_cast<std::size_t>(n + 1), RingElement(n));
  for (int k = 1; k <= n; ++k) {
    RingElement p = elementary(k) * mpq_class(k % 2 == 1 ? k : -k);
    for (int j = 1; j < k; ++j) {
      RingElement term = elementary(j) * power_sums[static_cast<std::size_t>(k - j)];
      if (j % 2 == 1) {
        p += term;
      } else {
        p -= term;
      }
    }
    power_sums[static_cast<std::size_t>(k)] = std::move(p);
  }

  RingElement log_td(n);
  for (int k = 1; k <= n; ++k) log_td += power_sums[static_cast<std::size_t>(k)] * log_coeffs[static_cast<std::size_t>(k)];

  // exp, truncated: log_td has no constant term, so n+1 terms suffice.
  RingElement result = RingElement::constant(n, 1);
  RingElement power = RingElement::constant(n, 1);
  mpz_class factorial = 1;
  for (int m = 1; m <= n; ++m) {
    power = (power * log_td).truncated(weights, n);
    factorial *= m;
    result += power * mpq_class(1, factorial);
  }
  return result.truncated(weights, n);
}

RingElement todd_class(const ModelManifold& m) {
  const int n = m.dim();
  if (n > kMaxToddDim) throw InvalidInput("todd_class: dimension exceeds " + std::to_string(kMaxToddDim));
  if (n == 0) return m.one();
  const RingElement universal = todd_polynomial(n);
  std::vector<RingElement> values;
  for (int j = 1; j <= n; ++j) values.push_back(m.tangent_class(j));
  return substitute(
      universal, values, m.zero(), m.one(),
      [&](const mpq_class& c) { return m.one() * c; },
      [&](const RingElement& a, const RingElement& b) { return m.multiply(a, b); });
}

mpq_class euler_characteristic(const ModelManifold& m, const RingElement& line_c1, long mm) {
  const int degree = ModelManifold::homogeneous_degree(line_c1);
  if (degree != 1 && degree != -1)
    throw InvalidInput("euler_characteristic: line class must have degree 1");
  const RingElement scaled = line_c1 * mpq_class(mm);
  // exp(scaled), nilpotent beyond degree dim.
  RingElement character = m.one();
  RingElement power = m.one();
  mpz_class factorial = 1;
  for (int k = 1; k <= m.dim(); ++k) {
    power = m.multiply(power, scaled);
    factorial *= k;
    character += power * mpq_class(1, factorial);
  }
  const mpq_class chi = m.integrate(m.multiply(todd_class(m), character));
  if (chi.get_den() != 1)
    throw ConsistencyError("euler_characteristic: non-integral value " + chi.get_str() + " for " + m.label());
  return chi;
}

}  // namespace chernform
