#pragma once

#include <cstddef>
#include <vector>

#include "rsf/error.hpp"
#include "rsf/scalar.hpp"

namespace rsf {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (ScalarTraits<T>::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (ScalarTraits<T>::is_zero(y)) continue;
          r(i, j) += x * y;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!ScalarTraits<T>::is_zero(x)) return false;
    return true;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = ScalarTraits<U>::from((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Scalar>;

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <class T>
bool is_diagonal(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !ScalarTraits<T>::is_zero(m(i, j))) return false;
  return true;
}

template <class T>
bool is_strictly_lower(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!ScalarTraits<T>::is_zero(m(i, j))) return false;
  return true;
}

template <class T>
bool is_strictly_upper(const Matrix<T>& m) {
  return is_strictly_lower(m.transpose());
}

template <class T>
bool is_lower_unitriangular(const Matrix<T>& m) {
  if (!m.square()) return false;
  Matrix<T> n = m - Matrix<T>::identity(m.rows());
  return is_strictly_lower(n);
}

template <class T>
bool is_upper_unitriangular(const Matrix<T>& m) {
  if (!m.square()) return false;
  Matrix<T> n = m - Matrix<T>::identity(m.rows());
  return is_strictly_upper(n);
}

// Finite exponential series of a strictly triangular matrix.
template <class T>
Matrix<T> exp_nilpotent(const Matrix<T>& x) {
  if (!x.square() || !(is_strictly_lower(x) || is_strictly_upper(x)))
    throw Error(ErrorKind::invalid_input, "exp_nilpotent: argument is not strictly triangular");
  const std::size_t n = x.rows();
  Matrix<T> result = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x;
    if (term.is_zero()) break;
    term *= T(1) / T(static_cast<int>(k));
    result += term;
  }
  return result;
}

template <class T>
Matrix<T> log_unipotent(const Matrix<T>& g) {
  if (!is_lower_unitriangular(g) && !is_upper_unitriangular(g))
    throw Error(ErrorKind::invalid_input, "log_unipotent: argument is not unitriangular");
  const std::size_t n = g.rows();
  Matrix<T> nil = g - Matrix<T>::identity(n);
  Matrix<T> result(n, n);
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    T c = T(1) / T(static_cast<int>(k));
    if (k % 2 == 0) c = -c;
    result += power * c;
  }
  return result;
}

template <class T>
struct LDU {
  Matrix<T> l;
  Matrix<T> d;
  Matrix<T> u;
};

// Doolittle elimination without pivoting; fails at the first vanishing
// leading principal minor.
template <class T>
LDU<T> ldu(const Matrix<T>& g) {
  if (!g.square()) throw Error(ErrorKind::invalid_input, "ldu: matrix is not square");
  const std::size_t n = g.rows();
  Matrix<T> a = g;
  Matrix<T> l = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!ScalarTraits<T>::invertible(a(k, k)))
      throw Error(ErrorKind::stratum_failure, "leading principal minor vanishes",
                  static_cast<int>(k + 1));
    T inv = T(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ScalarTraits<T>::is_zero(a(i, k))) continue;
      T factor = a(i, k) * inv;
      l(i, k) = factor;
      a(i, k) = T();
      for (std::size_t j = k + 1; j < n; ++j)
        if (!ScalarTraits<T>::is_zero(a(k, j))) a(i, j) -= factor * a(k, j);
    }
  }
  LDU<T> out{std::move(l), Matrix<T>(n, n), Matrix<T>::identity(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.d(k, k) = a(k, k);
    T inv = T(1) / a(k, k);
    for (std::size_t j = k + 1; j < n; ++j)
      if (!ScalarTraits<T>::is_zero(a(k, j))) out.u(k, j) = a(k, j) * inv;
  }
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& g) {
  if (!g.square()) throw Error(ErrorKind::invalid_input, "inverse: matrix is not square");
  const std::size_t n = g.rows();
  Matrix<T> a = g;
  Matrix<T> r = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && !ScalarTraits<T>::invertible(a(p, k))) ++p;
    if (p == n) throw Error(ErrorKind::invalid_input, "inverse: matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(r(p, j), r(k, j));
      }
    T inv = T(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= inv;
      r(k, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || ScalarTraits<T>::is_zero(a(i, k))) continue;
      T f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

// Fraction-free Bareiss elimination with row pivoting.
template <class T>
T det_bareiss(Matrix<T> a) {
  if (!a.square()) throw Error(ErrorKind::invalid_input, "det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ScalarTraits<T>::is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && ScalarTraits<T>::is_zero(a(p, k))) ++p;
      if (p == n) return T();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = T();
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace rsf
