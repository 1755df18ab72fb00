#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "chernform/form.hpp"

namespace chernform {

inline constexpr double kDefaultTolerance = 1e-9;

struct SamplingOptions {
  int trials = 50;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
};

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for stream `index` of a run seeded with `seed`. Streams depend only
/// on (seed, index), so work can be split across threads without changing
/// results.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Engine plus portable normal sampling (Box-Muller on 53-bit uniforms), so
/// streams are identical across standard library implementations.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // (0, 1)
  double normal();   // N(0, 1)
  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct VerdictReport {
  bool pass = true;
  int degree = 0;             // p of the (p,p)-form
  int trials = 0;
  double min_value = 0.0;     // smallest sampled evaluation
  double scale = 1.0;         // max(1, largest |coefficient|)
  double threshold = 0.0;     // -tol * scale
  double imaginary_residual = 0.0;  // largest |Im| seen across samples
  std::vector<std::vector<std::complex<double>>> witness;  // tuple attaining min_value
};

/// Seeded Monte-Carlo test of (-i)^{p^2} phi(X, conj X) >= 0. PASS iff the
/// smallest sample is >= -tol * scale. Throws InvalidInput for a non-real
/// or non-homogeneous phi.
VerdictReport nonnegative_sampled(const Form& phi, const SamplingOptions& options);

/// Largest coefficient of (phi - conj phi) / 2, i.e. the size of the
/// imaginary part of phi.
double imaginary_norm(const Form& phi);

}  // namespace chernform
