#pragma once

#include <random>
#include <string>
#include <vector>

#include "rsf/factor.hpp"
#include "rsf/haar.hpp"

namespace rsf::testing {

struct Config {
  Family family;
  int rank;
  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

inline Scalar small_scalar(std::mt19937_64& rng, int bound = 3, bool complex = true) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  if (!complex) return Scalar(re);
  mpq_class im(num(rng), den(rng));
  im.canonicalize();
  return Scalar(re, im);
}

inline ZetaCoords random_zeta(std::mt19937_64& rng, int n, bool complex = true) {
  ZetaCoords z;
  for (int j = 0; j < n; ++j) z.pairs.emplace_back(small_scalar(rng, 3, complex), small_scalar(rng, 3, complex));
  return z;
}

// away from every vanishing factor, so the full inverse applies
inline ZetaCoords random_regular_zeta(std::mt19937_64& rng, int n) {
  for (;;) {
    ZetaCoords z = random_zeta(rng, n);
    bool ok = true;
    for (const auto& p : z.pairs) ok = ok && !pair_factor(p).is_zero();
    if (ok) return z;
  }
}

inline QMatrix sl2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  QMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// iota_{tau_n}(g(zeta_n)) ... iota_{tau_1}(g(zeta_1)) h by full conjugated matrices
inline QMatrix direct_product(const Chart& chart, const ZetaCoords& z) {
  const Realization& real = chart.realization();
  QMatrix g = QMatrix::identity(real.size());
  for (int j = 0; j < chart.length(); ++j) {
    const auto& [zm, zp] = z.pairs[j];
    QMatrix block = real.iota_simple(chart.word()[j], sl2(1, zp, zm, Scalar(1) + zm * zp));
    const QMatrix& w = chart.chain(j);
    g = inverse(w) * block * w * g;
  }
  if (!z.h.empty()) g = g * QMatrix::diagonal(z.h);
  return g;
}

// Height filtration: modulo roots of larger height, the height-h part of
// log(m) - log(P) is sum c_j x_j over roots of height h, where P carries the
// coefficients already found.
inline std::vector<Scalar> height_extraction(const QMatrix& m, Side side, const Chart& chart) {
  const int n = chart.length();
  int top = 0;
  for (int j = 0; j < n; ++j) top = std::max(top, chart.height(j));
  std::vector<Scalar> c(n);
  QMatrix logm = log_unipotent(m);
  auto gen = [&](int j) -> const QMatrix& { return side == Side::lower ? chart.f(j) : chart.e(j); };
  for (int h = 1; h <= top; ++h) {
    QMatrix p = QMatrix::identity(m.rows());
    for (int j = 0; j < n; ++j) p = exp_nilpotent(c[j] * gen(j)) * p;
    QMatrix diff = logm - log_unipotent(p);
    for (int j = 0; j < n; ++j) {
      if (chart.height(j) != h) continue;
      const QMatrix& x = gen(j);
      for (std::size_t a = 0; a < x.rows() && c[j].is_zero(); ++a)
        for (std::size_t b = 0; b < x.cols(); ++b)
          if (!x(a, b).is_zero()) {
            c[j] = diff(a, b) / x(a, b);
            break;
          }
    }
  }
  return c;
}

inline OrderedExpCoords oracle_coords(const Chart& chart, const QMatrix& g) {
  LDU<Scalar> f = ldu(g);
  QMatrix u = f.d * f.u * inverse(f.d);
  OrderedExpCoords out;
  out.l = height_extraction(f.l, Side::lower, chart);
  out.u = height_extraction(u, Side::upper, chart);
  for (std::size_t i = 0; i < g.rows(); ++i) out.h.push_back(f.d(i, i));
  return out;
}

inline std::vector<Config> roundtrip_configs() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 1},
          {Family::B, 2}, {Family::C, 1}, {Family::C, 2}, {Family::D, 3}};
}

}  // namespace rsf::testing
