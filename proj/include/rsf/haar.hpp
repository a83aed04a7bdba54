#pragma once

#include <utility>
#include <vector>

#include "rsf/factor.hpp"

namespace rsf {

// coeff * sqrt(rad) with rad a squarefree positive integer
class Radical {
 public:
  Radical() = default;
  Radical(Scalar c) : coeff_(std::move(c)) {}
  Radical(long v) : coeff_(v) {}
  Radical(int v) : coeff_(v) {}

  // positive square root of a positive rational
  static Radical sqrt(const mpq_class& q);

  const Scalar& coeff() const { return coeff_; }
  const mpz_class& radicand() const { return rad_; }
  bool is_rational() const { return rad_ == 1 || coeff_.is_zero(); }
  bool is_zero() const { return coeff_.is_zero(); }
  // throws invalid_input unless rational
  Scalar value() const;

  Radical inverse() const;
  Radical pow(long e) const;
  Radical& operator*=(const Radical& o);
  friend Radical operator*(Radical a, const Radical& b) { return a *= b; }
  friend Radical operator/(Radical a, const Radical& b) { return a *= b.inverse(); }
  Radical operator-() const;

  friend bool operator==(const Radical& a, const Radical& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.rad_ == b.rad_ && a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

  // "c" or "c*sqrt(R)"
  std::string str() const;
  std::complex<double> to_complex() const;

 private:
  Scalar coeff_;
  mpz_class rad_ = 1;
};

using RadicalPair = std::pair<Radical, Radical>;

struct ZetaFromEta {
  std::vector<RadicalPair> zeta;
  std::vector<Radical> h_shift;
};

// prod |1 + zeta^- zeta^+|^{2(delta - 1)}
mpq_class haar_density(const ZetaCoords& zeta, const Chart& chart);

// a(eta)^2 = 1 / (1 - eta^- eta^+), which must be a positive rational
mpq_class a_squared(const RadicalPair& eta, int index);

ZetaFromEta zeta_from_eta(const std::vector<RadicalPair>& eta, const Chart& chart);
std::vector<RadicalPair> eta_from_zeta(const std::vector<RadicalPair>& zeta, const Chart& chart);

std::vector<RadicalPair> to_radical(const std::vector<Pair>& pairs);

struct TransportCheck {
  bool pair_identity = false;  // 1 + zeta^- zeta^+ = a^2 for every j
  bool transport = false;      // density * prod a^4 = prod a^{4 delta}
  mpq_class lhs;
  mpq_class rhs;
};
TransportCheck density_transport_check(const std::vector<RadicalPair>& eta, const Chart& chart);

struct UnitJacobianCheck {
  Scalar det_lu_zeta;
  Scalar det_zeta_eta;
  Scalar det;
  mpq_class modulus_squared;
  Scalar predicted;  // prod a^{2(delta + 1)}, the value det takes
  bool unit = false;
};
// eta with every a(eta_j) rational; throws invalid_input otherwise
UnitJacobianCheck unit_jacobian_check(const std::vector<Pair>& eta, const Chart& chart);

}  // namespace rsf
