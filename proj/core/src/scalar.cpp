#include "chernform/scalar.hpp"

#include <cmath>
#include <sstream>

#include "chernform/errors.hpp"

namespace chernform {

const char* to_string(ScalarMode mode) {
  return mode == ScalarMode::Exact ? "exact" : "float";
}

void require_same_mode(ScalarMode a, ScalarMode b, const char* where) {
  if (a != b) {
    throw InvalidInput(std::string(where) + ": scalar mode mismatch (" + to_string(a) + " vs " +
                       to_string(b) + ")");
  }
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  canonicalize();
}

GaussianRational::GaussianRational(long re, long im) : re_(re), im_(im) {}

void GaussianRational::canonicalize() {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::conj() const { return {re_, -im_}; }

mpq_class GaussianRational::norm() const { return re_ * re_ + im_ * im_; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class d = o.norm();
  if (sgn(d) == 0) throw InvalidInput("GaussianRational: division by zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::zero(ScalarMode mode) {
  return mode == ScalarMode::Exact ? Scalar(GaussianRational{}) : Scalar(Float{0.0, 0.0});
}

Scalar Scalar::one(ScalarMode mode) { return from_integer(1, mode); }

Scalar Scalar::imag_unit(ScalarMode mode) {
  return mode == ScalarMode::Exact ? Scalar(GaussianRational(0L, 1L)) : Scalar(Float{0.0, 1.0});
}

Scalar Scalar::from_integer(long v, ScalarMode mode) {
  return mode == ScalarMode::Exact ? Scalar(GaussianRational(v, 0L))
                                   : Scalar(Float{static_cast<double>(v), 0.0});
}

Scalar Scalar::from_doubles(double re, double im, ScalarMode mode) {
  if (!std::isfinite(re) || !std::isfinite(im)) throw InvalidInput("Scalar: non-finite value");
  if (mode == ScalarMode::Float) return Scalar(Float{re, im});
  return Scalar(GaussianRational(mpq_class(re), mpq_class(im)));
}

bool Scalar::is_zero() const {
  if (is_exact()) return exact().is_zero();
  return flt() == Float{0.0, 0.0};
}

double Scalar::abs() const { return std::abs(to_complex()); }
double Scalar::real_d() const { return to_complex().real(); }
double Scalar::imag_d() const { return to_complex().imag(); }

std::complex<double> Scalar::to_complex() const {
  return is_exact() ? exact().to_complex() : flt();
}

Scalar Scalar::conj() const {
  if (is_exact()) return Scalar(exact().conj());
  return Scalar(std::conj(flt()));
}

Scalar Scalar::to_mode(ScalarMode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == ScalarMode::Float) return Scalar(exact().to_complex());
  return from_doubles(flt().real(), flt().imag(), ScalarMode::Exact);
}

Scalar Scalar::pow(unsigned n) const {
  Scalar result = one(mode());
  Scalar base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(mode(), o.mode(), "Scalar +");
  if (is_exact()) {
    std::get<GaussianRational>(value_) += o.exact();
  } else {
    std::get<Float>(value_) += o.flt();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(mode(), o.mode(), "Scalar -");
  if (is_exact()) {
    std::get<GaussianRational>(value_) -= o.exact();
  } else {
    std::get<Float>(value_) -= o.flt();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(mode(), o.mode(), "Scalar *");
  if (is_exact()) {
    std::get<GaussianRational>(value_) *= o.exact();
  } else {
    std::get<Float>(value_) *= o.flt();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_mode(mode(), o.mode(), "Scalar /");
  if (o.is_zero()) throw InvalidInput("Scalar: division by zero");
  if (is_exact()) {
    std::get<GaussianRational>(value_) /= o.exact();
  } else {
    std::get<Float>(value_) /= o.flt();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-exact());
  return Scalar(-flt());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.flt() == b.flt();
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (is_exact()) {
    os << "(" << exact().re().get_str() << ")+(" << exact().im().get_str() << ")i";
  } else {
    os.precision(17);
    os << "(" << flt().real() << ")+(" << flt().imag() << ")i";
  }
  return os.str();
}

}  // namespace chernform
