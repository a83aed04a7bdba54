#include "rsf/haar.hpp"

#include "rsf/dual.hpp"
#include "rsf/error.hpp"

namespace rsf {

namespace {

// n = s^2 * r with r squarefree; returns (s, r)
std::pair<mpz_class, mpz_class> split_square(mpz_class n) {
  mpz_class s = 1, r = 1;
  for (unsigned long p = 2; p < 1000000 && mpz_class(p) * p <= n; ++p) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    int k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++k;
    }
    for (int i = 0; i < k / 2; ++i) s *= p;
    if (k % 2) r *= p;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class q;
    mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
    s *= q;
  } else {
    r *= n;
  }
  return {s, r};
}

}  // namespace

Radical Radical::sqrt(const mpq_class& q) {
  if (sgn(q) <= 0) throw Error(ErrorKind::branch_violation, "square root of a non-positive number");
  // sqrt(p/d) = sqrt(p d) / d
  auto [s, r] = split_square(q.get_num() * q.get_den());
  mpq_class c(s, q.get_den());
  c.canonicalize();
  Radical out;
  out.coeff_ = Scalar(c);
  out.rad_ = r;
  return out;
}

Scalar Radical::value() const {
  if (!is_rational()) throw Error(ErrorKind::invalid_input, "value is not rational: " + str());
  return coeff_;
}

Radical Radical::inverse() const {
  // 1 / (c sqrt(R)) = sqrt(R) / (c R)
  Radical out;
  out.coeff_ = (coeff_ * Scalar(mpq_class(rad_))).inverse();
  out.rad_ = rad_;
  return out;
}

Radical Radical::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Radical out(1);
  Radical base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Radical& Radical::operator*=(const Radical& o) {
  coeff_ *= o.coeff_;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), rad_.get_mpz_t(), o.rad_.get_mpz_t());
  coeff_ *= Scalar(mpq_class(g));
  rad_ = (rad_ / g) * (o.rad_ / g);
  if (coeff_.is_zero()) rad_ = 1;
  return *this;
}

Radical Radical::operator-() const {
  Radical out = *this;
  out.coeff_ = -coeff_;
  return out;
}

std::string Radical::str() const {
  if (is_rational()) return coeff_.str();
  return coeff_.str() + "*sqrt(" + rad_.get_str() + ")";
}

std::complex<double> Radical::to_complex() const {
  return coeff_.to_complex() * std::sqrt(rad_.get_d());
}

mpq_class haar_density(const ZetaCoords& zeta, const Chart& chart) {
  if (static_cast<int>(zeta.pairs.size()) != chart.length())
    throw Error(ErrorKind::invalid_input, "zeta has the wrong number of entries");
  mpq_class v = 1;
  for (int j = 0; j < chart.length(); ++j) {
    int e = chart.delta(j) - 1;
    if (e == 0) continue;
    mpq_class n = pair_factor(zeta.pairs[j]).norm();
    mpq_class p = 1;
    for (int k = 0; k < e; ++k) p *= n;
    v *= p;
  }
  return v;
}

mpq_class a_squared(const RadicalPair& eta, int index) {
  Radical prod = eta.first * eta.second;
  if (!prod.is_rational())
    throw Error(ErrorKind::branch_violation, "1 - eta^- eta^+ is not rational", index);
  Scalar m = Scalar(1) - prod.value();
  if (!m.is_real() || sgn(m.re()) <= 0)
    throw Error(ErrorKind::branch_violation, "1 - eta^- eta^+ is not a positive real", index, m);
  return 1 / m.re();
}

std::vector<RadicalPair> to_radical(const std::vector<Pair>& pairs) {
  std::vector<RadicalPair> out;
  for (const auto& p : pairs) out.emplace_back(Radical(p.first), Radical(p.second));
  return out;
}

namespace {

void check_size(const Chart& chart, std::size_t got) {
  if (static_cast<int>(got) != chart.length())
    throw Error(ErrorKind::invalid_input, "coordinates have the wrong number of entries");
}

}  // namespace

ZetaFromEta zeta_from_eta(const std::vector<RadicalPair>& eta, const Chart& chart) {
  check_size(chart, eta.size());
  const int n = chart.length();
  std::vector<Radical> a;
  for (int k = 0; k < n; ++k) a.push_back(Radical::sqrt(a_squared(eta[k], k + 1)));
  ZetaFromEta out;
  for (int j = 0; j < n; ++j) {
    Radical zm = eta[j].first, zp = eta[j].second;
    zp *= a[j].pow(chart.pairing(j, j));
    for (int k = j + 1; k < n; ++k) {
      int c = chart.pairing(j, k);
      if (c == 0) continue;
      zm *= a[k].pow(-c);
      zp *= a[k].pow(c);
    }
    out.zeta.emplace_back(zm, zp);
  }
  for (int p = 0; p < chart.realization().size(); ++p) {
    Radical v(1);
    for (int k = 0; k < n; ++k)
      if (chart.h_diag(k)[p] != 0) v *= a[k].pow(chart.h_diag(k)[p]);
    out.h_shift.push_back(v);
  }
  return out;
}

std::vector<RadicalPair> eta_from_zeta(const std::vector<RadicalPair>& zeta, const Chart& chart) {
  check_size(chart, zeta.size());
  const int n = chart.length();
  std::vector<Radical> a;
  for (int k = 0; k < n; ++k) {
    Radical prod = zeta[k].first * zeta[k].second;
    if (!prod.is_rational())
      throw Error(ErrorKind::branch_violation, "1 + zeta^- zeta^+ is not rational", k + 1);
    Scalar s = Scalar(1) + prod.value();
    if (!s.is_real() || sgn(s.re()) <= 0)
      throw Error(ErrorKind::branch_violation, "1 + zeta^- zeta^+ is not a positive real", k + 1, s);
    a.push_back(Radical::sqrt(s.re()));
  }
  std::vector<RadicalPair> out;
  for (int j = 0; j < n; ++j) {
    Radical em = zeta[j].first, ep = zeta[j].second;
    ep *= a[j].pow(-chart.pairing(j, j));
    for (int k = j + 1; k < n; ++k) {
      int c = chart.pairing(j, k);
      if (c == 0) continue;
      em *= a[k].pow(c);
      ep *= a[k].pow(-c);
    }
    out.emplace_back(em, ep);
  }
  return out;
}

TransportCheck density_transport_check(const std::vector<RadicalPair>& eta, const Chart& chart) {
  ZetaFromEta z = zeta_from_eta(eta, chart);
  const int n = chart.length();
  TransportCheck out;
  out.pair_identity = true;
  mpq_class density = 1, a4 = 1, rhs = 1;
  for (int j = 0; j < n; ++j) {
    mpq_class A = a_squared(eta[j], j + 1);
    Radical prod = z.zeta[j].first * z.zeta[j].second;
    if (!prod.is_rational()) {
      out.pair_identity = false;
      continue;
    }
    Scalar s = Scalar(1) + prod.value();
    if (s != Scalar(A)) out.pair_identity = false;
    mpq_class m = s.norm();
    for (int k = 0; k < chart.delta(j) - 1; ++k) density *= m;
    a4 *= A * A;
    for (int k = 0; k < 2 * chart.delta(j); ++k) rhs *= A;
  }
  out.lhs = density * a4;
  out.rhs = rhs;
  out.transport = out.pair_identity && out.lhs == out.rhs;
  return out;
}

UnitJacobianCheck unit_jacobian_check(const std::vector<Pair>& eta, const Chart& chart) {
  check_size(chart, eta.size());
  const int n = chart.length();
  using D = Dual<Scalar>;
  std::vector<Scalar> a;
  std::vector<RadicalPair> reta = to_radical(eta);
  for (int k = 0; k < n; ++k) {
    Radical r = Radical::sqrt(a_squared(reta[k], k + 1));
    if (!r.is_rational())
      throw Error(ErrorKind::invalid_input, "a(eta) is not rational", k + 1);
    a.push_back(r.value());
  }
  QMatrix jz(2 * n, 2 * n);
  ZetaCoords zeta;
  for (int v = 0; v < 2 * n; ++v) {
    std::vector<D> em, ep, ad;
    for (int k = 0; k < n; ++k) {
      em.emplace_back(eta[k].first, Scalar(v == k ? 1 : 0));
      ep.emplace_back(eta[k].second, Scalar(v == n + k ? 1 : 0));
      // da = a^3 d(eta^- eta^+) / 2
      D prod = em[k] * ep[k];
      ad.emplace_back(a[k], a[k] * a[k] * a[k] * prod.d / Scalar(2));
    }
    for (int j = 0; j < n; ++j) {
      D zm = em[j], zp = ep[j];
      for (int e = 0; e < chart.pairing(j, j); ++e) zp = zp * ad[j];
      for (int k = j + 1; k < n; ++k) {
        int c = chart.pairing(j, k);
        D p = D(Scalar(1), Scalar(0));
        for (int e = 0; e < std::abs(c); ++e) p = p * ad[k];
        if (c > 0) {
          zm = zm / p;
          zp = zp * p;
        } else if (c < 0) {
          zm = zm * p;
          zp = zp / p;
        }
      }
      jz(j, v) = zm.d;
      jz(n + j, v) = zp.d;
      if (v == 0) zeta.pairs.emplace_back(zm.v, zp.v);
    }
  }
  UnitJacobianCheck out;
  out.det_lu_zeta = jacobian_det_ad(zeta, chart);
  out.det_zeta_eta = det_bareiss(jz);
  out.det = out.det_lu_zeta * out.det_zeta_eta;
  out.modulus_squared = out.det.norm();
  out.predicted = Scalar(1);
  for (int k = 0; k < n; ++k) out.predicted *= (a[k] * a[k]).pow(chart.delta(k) + 1);
  out.unit = out.modulus_squared == 1;
  return out;
}

}  // namespace rsf
