#include "chernform/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "chernform/errors.hpp"

namespace chernform {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL));
}

double NormalStream::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::complex<double> NormalStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double imaginary_norm(const Form& phi) {
  return max_abs_difference(phi, conjugate(phi)) / 2.0;
}

VerdictReport nonnegative_sampled(const Form& phi, const SamplingOptions& options) {
  if (options.trials <= 0) throw InvalidInput("nonnegative_sampled: trials must be positive");
  if (!(options.tol >= 0.0)) throw InvalidInput("nonnegative_sampled: tol must be nonnegative");

  VerdictReport report;
  report.trials = options.trials;
  report.scale = phi.scale();
  report.threshold = -options.tol * report.scale;

  if (phi.is_zero()) return report;

  const auto [p, q] = phi.leading_bidegree();
  if (!phi.is_homogeneous(p, p))
    throw InvalidInput("nonnegative_sampled: form is not homogeneous of bidegree (p,p)");
  const double imag = imaginary_norm(phi);
  if (imag > options.tol * report.scale) {
    std::ostringstream os;
    os << "nonnegative_sampled: form is not real (imaginary-part norm " << imag << ", allowed "
       << options.tol * report.scale << ")";
    throw InvalidInput(os.str());
  }
  report.degree = p;

  const Form real_phi = phi.to_mode(ScalarMode::Float);
  const int n = phi.base_dim();
  std::vector<std::vector<std::complex<double>>> tuple(static_cast<std::size_t>(p),
                                                       std::vector<std::complex<double>>(n));
  report.min_value = std::numeric_limits<double>::infinity();
  for (int t = 0; t < options.trials; ++t) {
    NormalStream stream(stream_seed(options.seed, static_cast<std::uint64_t>(t)));
    for (auto& v : tuple)
      for (auto& z : v) z = stream.complex_normal();
    const std::complex<double> value = evaluate_float(real_phi, tuple);
    report.imaginary_residual = std::max(report.imaginary_residual, std::abs(value.imag()));
    if (value.real() < report.min_value) {
      report.min_value = value.real();
      report.witness = tuple;
    }
  }
  report.pass = report.min_value >= report.threshold;
  return report;
}

}  // namespace chernform
