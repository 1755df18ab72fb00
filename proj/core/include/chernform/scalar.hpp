#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace chernform {

enum class ScalarMode { Exact, Float };

const char* to_string(ScalarMode mode);

/// Complex number with arbitrary-precision rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im = 0);  // NOLINT: implicit from rationals is intended
  GaussianRational(long re, long im = 0);            // NOLINT

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussianRational conj() const;
  mpq_class norm() const;  // |z|^2, exact

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  void canonicalize();

  mpq_class re_;
  mpq_class im_;
};

/// A complex scalar in exactly one of two representations. Arithmetic between
/// scalars of different modes throws InvalidInput.
class Scalar {
 public:
  using Float = std::complex<double>;

  Scalar() : value_(Float{0.0, 0.0}) {}
  Scalar(GaussianRational v) : value_(std::move(v)) {}  // NOLINT
  Scalar(Float v) : value_(v) {}                        // NOLINT

  static Scalar zero(ScalarMode mode);
  static Scalar one(ScalarMode mode);
  /// sqrt(-1) in the given mode.
  static Scalar imag_unit(ScalarMode mode);
  static Scalar from_integer(long v, ScalarMode mode);
  /// Exact conversion of a double pair (every finite double is a dyadic rational).
  static Scalar from_doubles(double re, double im, ScalarMode mode);

  ScalarMode mode() const {
    return std::holds_alternative<GaussianRational>(value_) ? ScalarMode::Exact : ScalarMode::Float;
  }
  bool is_exact() const { return mode() == ScalarMode::Exact; }
  const GaussianRational& exact() const { return std::get<GaussianRational>(value_); }
  const Float& flt() const { return std::get<Float>(value_); }

  bool is_zero() const;
  double abs() const;
  double real_d() const;
  double imag_d() const;
  std::complex<double> to_complex() const;
  Scalar conj() const;
  Scalar to_mode(ScalarMode mode) const;
  /// Integer power, n >= 0.
  Scalar pow(unsigned n) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Equal iff same mode and same value (no tolerance).
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<GaussianRational, Float> value_;
};

void require_same_mode(ScalarMode a, ScalarMode b, const char* where);

}  // namespace chernform
