#include "rsf/factor.hpp"

#include <random>

#include "rsf/dual.hpp"
#include "rsf/error.hpp"

namespace rsf {

namespace {

using DualQ = Dual<Scalar>;

template <class T>
Matrix<T> torus(const std::vector<Scalar>& h, int n) {
  Matrix<T> m = Matrix<T>::identity(n);
  if (h.empty()) return m;
  if (static_cast<int>(h.size()) != n)
    throw Error(ErrorKind::invalid_input, "torus part has the wrong size");
  for (int p = 0; p < n; ++p) {
    if (h[p].is_zero()) throw Error(ErrorKind::invalid_input, "torus part is singular", p + 1);
    m(p, p) = ScalarTraits<T>::from(h[p]);
  }
  return m;
}

// iota_n(g(zeta_n)) ... iota_1(g(zeta_1)) * start
template <class T>
Matrix<T> product(const Chart& chart, const std::vector<T>& zm, const std::vector<T>& zp,
                  Matrix<T> start) {
  for (int j = 0; j < chart.length(); ++j) {
    apply_exp_left(start, chart.e_exp(j), zp[j]);
    apply_exp_left(start, chart.f_exp(j), zm[j]);
  }
  return start;
}

template <class T>
std::vector<T> peel(Matrix<T> m, Side side, const Chart& chart, bool check) {
  const int n = chart.length();
  std::vector<T> out(n);
  for (int j = n - 1; j >= 0; --j) {
    const Chart::Peel& pe = side == Side::lower ? chart.lower_peel(j) : chart.upper_peel(j);
    T x = m(pe.row, pe.col) * ScalarTraits<T>::from(pe.factor);
    apply_exp_left(m, side == Side::lower ? chart.f_exp(j) : chart.e_exp(j), -x);
    out[j] = std::move(x);
  }
  if (check && m != Matrix<T>::identity(m.rows()))
    throw Error(ErrorKind::invalid_input, "matrix is not in the unipotent subgroup of this group");
  return out;
}

template <class T>
struct LUCoords {
  std::vector<T> l;
  std::vector<T> u;
  std::vector<T> d;
};

template <class T>
LUCoords<T> lu_coords(const Chart& chart, const Matrix<T>& g, bool check) {
  LDU<T> f = ldu(g);
  const std::size_t n = g.rows();
  Matrix<T> u = f.u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ScalarTraits<T>::is_zero(u(i, j))) u(i, j) = f.d(i, i) * u(i, j) / f.d(j, j);
  LUCoords<T> out;
  out.l = peel(f.l, Side::lower, chart, check);
  out.u = peel(u, Side::upper, chart, check);
  for (std::size_t i = 0; i < n; ++i) out.d.push_back(f.d(i, i));
  return out;
}

void check_length(const Chart& chart, std::size_t got, const char* what) {
  if (static_cast<int>(got) != chart.length())
    throw Error(ErrorKind::invalid_input, std::string(what) + " has the wrong number of entries");
}

void split(const ZetaCoords& z, std::vector<Scalar>& zm, std::vector<Scalar>& zp) {
  zm.clear();
  zp.clear();
  for (const auto& p : z.pairs) {
    zm.push_back(p.first);
    zp.push_back(p.second);
  }
}

QMatrix unipotent(const Chart& chart, const std::vector<Scalar>& c, Side side) {
  QMatrix m = QMatrix::identity(chart.realization().size());
  for (int j = 0; j < chart.length(); ++j)
    apply_exp_left(m, side == Side::lower ? chart.f_exp(j) : chart.e_exp(j), c[j]);
  return m;
}

}  // namespace

Scalar pair_factor(const Pair& p) { return Scalar(1) + p.first * p.second; }

LDU<Scalar> ldu_minors(const QMatrix& g) {
  if (!g.square()) throw Error(ErrorKind::invalid_input, "ldu: matrix is not square");
  const std::size_t n = g.rows();
  auto minor = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    QMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = g(rows[i], cols[j]);
    return det_bareiss(s);
  };
  std::vector<Scalar> sigma{Scalar(1)};
  std::vector<std::size_t> lead;
  for (std::size_t k = 0; k < n; ++k) {
    lead.push_back(k);
    Scalar s = minor(lead, lead);
    if (s.is_zero())
      throw Error(ErrorKind::stratum_failure, "leading principal minor vanishes",
                  static_cast<int>(k + 1));
    sigma.push_back(s);
  }
  LDU<Scalar> out{QMatrix::identity(n), QMatrix(n, n), QMatrix::identity(n)};
  for (std::size_t k = 0; k < n; ++k) out.d(k, k) = sigma[k + 1] / sigma[k];
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> cols(lead.begin(), lead.begin() + j + 1);
    for (std::size_t i = j + 1; i < n; ++i) {
      std::vector<std::size_t> rows(lead.begin(), lead.begin() + j);
      rows.push_back(i);
      out.l(i, j) = minor(rows, cols) / sigma[j + 1];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows(lead.begin(), lead.begin() + i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> cols(lead.begin(), lead.begin() + i);
      cols.push_back(j);
      out.u(i, j) = minor(rows, cols) / sigma[i + 1];
    }
  }
  return out;
}

ForwardResult forward_map(const Chart& chart, const ZetaCoords& zeta) {
  check_length(chart, zeta.pairs.size(), "zeta");
  std::vector<Scalar> zm, zp;
  split(zeta, zm, zp);
  const int n = chart.realization().size();
  ForwardResult r;
  r.g = product(chart, zm, zp, torus<Scalar>(zeta.h, n));
  LUCoords<Scalar> c = lu_coords(chart, r.g, true);
  r.coords.l = std::move(c.l);
  r.coords.u = std::move(c.u);
  r.coords.h = std::move(c.d);
  return r;
}

Matrix<std::complex<double>> forward_map_numeric(const Chart& chart, const ZetaCoords& zeta) {
  check_length(chart, zeta.pairs.size(), "zeta");
  std::vector<std::complex<double>> zm, zp;
  for (const auto& p : zeta.pairs) {
    zm.push_back(p.first.to_complex());
    zp.push_back(p.second.to_complex());
  }
  return product(chart, zm, zp, torus<std::complex<double>>(zeta.h, chart.realization().size()));
}

QMatrix forward_map_stratum(std::shared_ptr<const Realization> real, const WeylElement& w,
                            const ZetaCoords& zeta) {
  const RootSystem& rs = real->root_system();
  Chart chart(real, stratum_word(rs, w));
  check_length(chart, zeta.pairs.size(), "zeta");
  std::vector<Scalar> zm, zp;
  split(zeta, zm, zp);
  return weyl_representative(*real, w) *
         product(chart, zm, zp, torus<Scalar>(zeta.h, real->size()));
}

std::vector<Scalar> ordered_exp_coords(const QMatrix& m, Side side, const Chart& chart) {
  bool ok = side == Side::lower ? is_lower_unitriangular(m) : is_upper_unitriangular(m);
  if (!ok || static_cast<int>(m.rows()) != chart.realization().size())
    throw Error(ErrorKind::invalid_input, "matrix is not unitriangular of the expected shape");
  return peel(m, side, chart, true);
}

QMatrix assemble(const Chart& chart, const OrderedExpCoords& coords) {
  check_length(chart, coords.l.size(), "l");
  check_length(chart, coords.u.size(), "u");
  const int n = chart.realization().size();
  return unipotent(chart, coords.l, Side::lower) * unipotent(chart, coords.u, Side::upper) *
         torus<Scalar>(coords.h, n);
}

namespace {

[[noreturn]] void exceptional(int index, const Scalar& value, const char* what) {
  throw Error(ErrorKind::exceptional_set, what, index, value);
}

// Back-substitution through the LDU factorization of Theta(l u).
ZetaCoords eta_route(const Chart& chart, const std::vector<Scalar>& l,
                     const std::vector<Scalar>& u) {
  const Realization& real = chart.realization();
  const int n = chart.length();
  const int N = real.size();
  QMatrix g0 = unipotent(chart, l, Side::lower) * unipotent(chart, u, Side::upper);
  LDU<Scalar> f;
  try {
    f = ldu(real.theta(g0));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::stratum_failure) throw;
    exceptional(e.index(), Scalar(0), "Theta(g) leaves the top stratum");
  }
  std::vector<Scalar> lp = peel(f.l, Side::lower, chart, true);

  std::vector<Scalar> zm(n), zp(n), em(n), ep(n), s(n);
  QMatrix gz = QMatrix::identity(N), ge = QMatrix::identity(N);
  for (int k = n - 1; k >= 0; --k) {
    Scalar tz, te;
    if (k < n - 1) {
      tz = lu_coords(chart, gz, false).l[k];
      te = lu_coords(chart, ge, false).l[k];
    }
    zm[k] = l[k] - tz;
    em[k] = lp[k] - te;
    Scalar P(1);
    for (int j = k + 1; j < n; ++j) {
      int c = chart.pairing(k, j);
      if (c == 0) continue;
      if (s[j].is_zero()) exceptional(j + 1, zm[j] * zp[j], "vanishing factor 1 + zeta^- zeta^+");
      P *= s[j].pow(-c);
    }
    Scalar den = P + em[k] * zm[k];
    if (den.is_zero()) exceptional(k + 1, em[k] * zm[k], "vanishing denominator");
    zp[k] = -em[k] / den;
    s[k] = Scalar(1) + zm[k] * zp[k];
    ep[k] = -zm[k] * s[k] / P;

    apply_exp_right(gz, chart.f_exp(k), zm[k]);
    apply_exp_right(gz, chart.e_exp(k), zp[k]);
    apply_exp_right(ge, chart.f_exp(k), em[k]);
    apply_exp_right(ge, chart.e_exp(k), ep[k]);
  }
  ZetaCoords z;
  for (int k = 0; k < n; ++k) z.pairs.emplace_back(zm[k], zp[k]);
  return z;
}

bool reproduces(const Chart& chart, const ZetaCoords& z, const std::vector<Scalar>& l,
                const std::vector<Scalar>& u) {
  std::vector<Scalar> zm, zp;
  split(z, zm, zp);
  QMatrix g = product(chart, zm, zp, QMatrix::identity(chart.realization().size()));
  try {
    LUCoords<Scalar> c = lu_coords(chart, g, true);
    return c.l == l && c.u == u;
  } catch (const Error&) {
    return false;
  }
}

void check_jacobian(const Chart& chart, const ZetaCoords& z) {
  for (int j = 0; j < chart.length(); ++j)
    if (chart.delta(j) > 1 && pair_factor(z.pairs[j]).is_zero())
      exceptional(j + 1, z.pairs[j].first * z.pairs[j].second,
                  "Jacobian vanishes at the preimage");
}

// Value at eps = 0 of the rational function interpolating the samples;
// nullopt when no fit of degree m exists.
struct Fit {
  bool ok = false;
  bool pole = false;
  Scalar value;
};

Fit fit_rational(const std::vector<Scalar>& eps, const std::vector<Scalar>& ys, int m) {
  const int rows = 2 * m + 1, cols = 2 * m + 2;
  Fit fit;
  if (static_cast<int>(eps.size()) < rows + 2) return fit;
  QMatrix a(rows, cols);
  for (int s = 0; s < rows; ++s) {
    Scalar pw(1);
    for (int d = 0; d <= m; ++d) {
      a(s, d) = pw;
      a(s, m + 1 + d) = -(ys[s] * pw);
      pw *= eps[s];
    }
  }
  // reduced row echelon form, then one null vector from the first free column
  std::vector<int> pivcol;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(a(p, j), a(row, j));
    Scalar inv = a(row, c).inverse();
    for (int j = 0; j < cols; ++j) a(row, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (int j = 0; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivcol.push_back(c);
    ++row;
  }
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol) is_piv[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_piv[c]) {
      free_col = c;
      break;
    }
  std::vector<Scalar> v(cols);
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -a(i, free_col);

  auto eval = [&](int off, const Scalar& x) {
    Scalar acc;
    for (int d = m; d >= 0; --d) acc = acc * x + v[off + d];
    return acc;
  };
  bool qzero = true;
  for (int d = 0; d <= m; ++d) qzero = qzero && v[m + 1 + d].is_zero();
  if (qzero) return fit;
  for (std::size_t s = rows; s < eps.size(); ++s) {
    Scalar q = eval(m + 1, eps[s]);
    if (q.is_zero() || eval(0, eps[s]) != ys[s] * q) return fit;
  }
  fit.ok = true;
  int vp = 0, vq = 0;
  while (vp <= m && v[vp].is_zero()) ++vp;
  while (v[m + 1 + vq].is_zero()) ++vq;
  if (vp > m || vp > vq) {
    fit.value = Scalar(0);
  } else if (vp == vq) {
    fit.value = v[vp] / v[m + 1 + vq];
  } else {
    fit.pole = true;
  }
  return fit;
}

ZetaCoords interpolate(const Chart& chart, const std::vector<Scalar>& l,
                       const std::vector<Scalar>& u, const Error& original) {
  const int n = chart.length();
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Scalar> dir(2 * n);
  bool nonzero = false;
  for (auto& d : dir) {
    d = dist(rng);
    nonzero = nonzero || !d.is_zero();
  }
  if (!nonzero) dir[0] = 1;

  std::vector<Scalar> eps;
  std::vector<std::vector<Scalar>> vals;
  int next = 1, failures = 0;
  auto sample = [&]() {
    while (failures < 64) {
      Scalar e(next > 0 ? next : next);
      next = next > 0 ? -next : -next + 1;
      std::vector<Scalar> ll(l), uu(u);
      for (int j = 0; j < n; ++j) {
        ll[j] += e * dir[j];
        uu[j] += e * dir[n + j];
      }
      try {
        ZetaCoords z = eta_route(chart, ll, uu);
        std::vector<Scalar> row;
        for (const auto& p : z.pairs) row.push_back(p.first);
        for (const auto& p : z.pairs) row.push_back(p.second);
        eps.push_back(e);
        vals.push_back(std::move(row));
        return true;
      } catch (const Error&) {
        ++failures;
      }
    }
    return false;
  };

  const int max_degree = 4 * n + 8;
  for (int m = 0; m <= max_degree; ++m) {
    while (static_cast<int>(eps.size()) < 2 * m + 3)
      if (!sample()) throw original;
    std::vector<Scalar> comp(2 * n);
    bool all = true;
    for (int i = 0; i < 2 * n && all; ++i) {
      std::vector<Scalar> ys;
      for (const auto& row : vals) ys.push_back(row[i]);
      Fit f = fit_rational(eps, ys, m);
      if (!f.ok) {
        all = false;
        break;
      }
      if (f.pole) throw original;
      comp[i] = f.value;
    }
    if (!all) continue;
    ZetaCoords z;
    for (int j = 0; j < n; ++j) z.pairs.emplace_back(comp[j], comp[n + j]);
    return z;
  }
  throw original;
}

}  // namespace

ZetaCoords inverse_map(const OrderedExpCoords& coords, const Chart& chart) {
  check_length(chart, coords.l.size(), "l");
  check_length(chart, coords.u.size(), "u");
  ZetaCoords z;
  try {
    z = eta_route(chart, coords.l, coords.u);
    if (!reproduces(chart, z, coords.l, coords.u))
      throw Error(ErrorKind::exceptional_set, "back-substitution did not reproduce the input");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::exceptional_set) throw;
    z = interpolate(chart, coords.l, coords.u, e);
    if (!reproduces(chart, z, coords.l, coords.u)) throw e;
  }
  check_jacobian(chart, z);
  z.h = coords.h;
  return z;
}

DualCoords transpose_dual(const ZetaCoords& zeta, const Chart& chart) {
  check_length(chart, zeta.pairs.size(), "zeta");
  const int n = chart.length();
  std::vector<Scalar> s;
  for (int j = 0; j < n; ++j) {
    s.push_back(pair_factor(zeta.pairs[j]));
    if (s.back().is_zero())
      exceptional(j + 1, zeta.pairs[j].first * zeta.pairs[j].second,
                  "vanishing factor 1 + zeta^- zeta^+");
  }
  DualCoords d;
  for (int k = 0; k < n; ++k) {
    Scalar prod(1);
    for (int j = k + 1; j < n; ++j)
      if (chart.pairing(k, j) != 0) prod *= s[j].pow(chart.pairing(k, j));
    d.pairs.emplace_back(-zeta.pairs[k].second / (s[k] * prod),
                         -zeta.pairs[k].first * s[k] * prod);
  }
  const int N = chart.realization().size();
  for (int p = 0; p < N; ++p) {
    Scalar v(1);
    for (int j = 0; j < n; ++j)
      if (chart.h_diag(j)[p] != 0) v *= s[j].pow(chart.h_diag(j)[p]);
    d.h_dual.push_back(v);
  }
  return d;
}

Scalar jacobian_det_formula(const ZetaCoords& zeta, const Chart& chart) {
  check_length(chart, zeta.pairs.size(), "zeta");
  Scalar v(1);
  for (int k = 0; k < chart.length(); ++k)
    if (chart.delta(k) > 1) v *= pair_factor(zeta.pairs[k]).pow(chart.delta(k) - 1);
  return v;
}

Scalar jacobian_double_product(const ZetaCoords& zeta, const Chart& chart) {
  check_length(chart, zeta.pairs.size(), "zeta");
  Scalar v(1);
  for (int j = 0; j < chart.length(); ++j) {
    int e = 0;
    for (int k = 0; k < j; ++k) e += chart.pairing(k, j);
    if (e != 0) v *= pair_factor(zeta.pairs[j]).pow(e);
  }
  return v;
}

QMatrix jacobian_matrix_ad(const ZetaCoords& zeta, const Chart& chart) {
  check_length(chart, zeta.pairs.size(), "zeta");
  const int n = chart.length();
  const int N = chart.realization().size();
  QMatrix jac(2 * n, 2 * n);
  for (int v = 0; v < 2 * n; ++v) {
    std::vector<DualQ> zm, zp;
    for (int j = 0; j < n; ++j) {
      zm.emplace_back(zeta.pairs[j].first, Scalar(v == j ? 1 : 0));
      zp.emplace_back(zeta.pairs[j].second, Scalar(v == n + j ? 1 : 0));
    }
    Matrix<DualQ> g = product(chart, zm, zp, Matrix<DualQ>::identity(N));
    LUCoords<DualQ> c = lu_coords(chart, g, false);
    for (int j = 0; j < n; ++j) {
      jac(j, v) = c.l[j].d;
      jac(n + j, v) = c.u[j].d;
    }
  }
  return jac;
}

Scalar jacobian_det_ad(const ZetaCoords& zeta, const Chart& chart) {
  return det_bareiss(jacobian_matrix_ad(zeta, chart));
}

bool delta_identity_check(const Chart& chart) {
  for (int j = 0; j < chart.length(); ++j) {
    int sum = 0;
    for (int k = 0; k < j; ++k) sum += chart.pairing(k, j);
    if (chart.delta(j) - 1 != sum) return false;
  }
  return true;
}

bool weight_grading_check(const Chart& chart, const ZetaCoords& zeta, const Scalar& t) {
  ZetaCoords scaled = zeta;
  scaled.h.clear();
  for (int k = 0; k < chart.length(); ++k) {
    Scalar w = t.pow(chart.height(k));
    scaled.pairs[k].first /= w;
    scaled.pairs[k].second *= w;
  }
  ZetaCoords base = zeta;
  base.h.clear();
  ForwardResult a = forward_map(chart, base);
  ForwardResult b = forward_map(chart, scaled);
  for (int j = 0; j < chart.length(); ++j) {
    Scalar w = t.pow(chart.height(j));
    if (b.coords.l[j] * w != a.coords.l[j]) return false;
    if (b.coords.u[j] != a.coords.u[j] * w) return false;
  }
  return true;
}

namespace {

int rank_of(QMatrix m) {
  int rank = 0;
  const std::size_t R = m.rows(), C = m.cols();
  for (std::size_t c = 0; c < C && rank < static_cast<int>(R); ++c) {
    std::size_t p = rank;
    while (p < R && m(p, c).is_zero()) ++p;
    if (p == R) continue;
    for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t i = rank + 1; i < R; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < C; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<int> detect_stratum_gl(const QMatrix& g) {
  if (!g.square()) throw Error(ErrorKind::invalid_input, "matrix is not square");
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      QMatrix s(i, j);
      for (int a = 0; a < i; ++a)
        for (int b = 0; b < j; ++b) s(a, b) = g(a, b);
      r[i][j] = rank_of(s);
    }
  std::vector<int> sigma(n, -1);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (r[i][j] - r[i - 1][j] - r[i][j - 1] + r[i - 1][j - 1] == 1) sigma[j - 1] = i - 1;
  for (int s : sigma)
    if (s < 0) throw Error(ErrorKind::invalid_input, "matrix is singular");
  return sigma;
}

}  // namespace rsf
