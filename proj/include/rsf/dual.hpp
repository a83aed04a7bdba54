#pragma once

#include "rsf/scalar.hpp"

namespace rsf {

// First-order dual number v + d*eps with eps^2 = 0.
template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(T value) : v(std::move(value)) {}
  Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
  Dual(int value) : v(value) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    bool dz = ScalarTraits<T>::is_zero(d), odz = ScalarTraits<T>::is_zero(o.d);
    if (!odz) {
      T t = v * o.d;
      if (dz)
        d = std::move(t);
      else {
        d *= o.v;
        d += t;
      }
    } else if (!dz) {
      d *= o.v;
    }
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    T inv = T(1) / o.v;
    v *= inv;
    d = (d - v * o.d) * inv;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  Dual operator-() const { return Dual(-v, -d); }

  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

template <class T>
struct ScalarTraits<Dual<T>> {
  static Dual<T> from(const Scalar& s) { return Dual<T>(ScalarTraits<T>::from(s)); }
  static bool is_zero(const Dual<T>& s) {
    return ScalarTraits<T>::is_zero(s.v) && ScalarTraits<T>::is_zero(s.d);
  }
  static bool invertible(const Dual<T>& s) { return ScalarTraits<T>::invertible(s.v); }
};

}  // namespace rsf
