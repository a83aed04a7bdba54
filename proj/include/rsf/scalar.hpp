#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace rsf {

// Gaussian rational re + im*i with arbitrary precision parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(int v) : re_(v) {}
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "p/q+r/s*i", zero parts omitted, "0" for zero
  std::string str() const;
  static Scalar parse(const std::string& text);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// conversion hook used by templated kernels
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Scalar> {
  static Scalar from(const Scalar& s) { return s; }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static bool invertible(const Scalar& s) { return !s.is_zero(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static std::complex<double> from(const Scalar& s) { return s.to_complex(); }
  static bool is_zero(const std::complex<double>& s) { return s == std::complex<double>(); }
  static bool invertible(const std::complex<double>& s) { return !is_zero(s); }
};

}  // namespace rsf
