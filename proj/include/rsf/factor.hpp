#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "rsf/matrep.hpp"

namespace rsf {

using Pair = std::pair<Scalar, Scalar>;  // (zeta^-, zeta^+)

struct ZetaCoords {
  std::vector<Pair> pairs;
  std::vector<Scalar> h;  // diagonal of the torus part; empty means identity
};

// g = exp(l_n f_n)...exp(l_1 f_1) exp(u_n e_n)...exp(u_1 e_1) h
struct OrderedExpCoords {
  std::vector<Scalar> l;
  std::vector<Scalar> u;
  std::vector<Scalar> h;
};

struct DualCoords {
  std::vector<Pair> pairs;
  std::vector<Scalar> h_dual;
};

struct ForwardResult {
  QMatrix g;
  OrderedExpCoords coords;
};

enum class Side { lower, upper };

// ldu() itself lives in matrix.hpp
LDU<Scalar> ldu_minors(const QMatrix& g);

ForwardResult forward_map(const Chart& chart, const ZetaCoords& zeta);
Matrix<std::complex<double>> forward_map_numeric(const Chart& chart, const ZetaCoords& zeta);
QMatrix forward_map_stratum(std::shared_ptr<const Realization> real, const WeylElement& w,
                            const ZetaCoords& zeta);

std::vector<Scalar> ordered_exp_coords(const QMatrix& m, Side side, const Chart& chart);
QMatrix assemble(const Chart& chart, const OrderedExpCoords& coords);

ZetaCoords inverse_map(const OrderedExpCoords& coords, const Chart& chart);
DualCoords transpose_dual(const ZetaCoords& zeta, const Chart& chart);

Scalar jacobian_det_formula(const ZetaCoords& zeta, const Chart& chart);
Scalar jacobian_double_product(const ZetaCoords& zeta, const Chart& chart);
// rows (l_1..l_n, u_1..u_n), columns (zeta^-_1..zeta^-_n, zeta^+_1..zeta^+_n)
QMatrix jacobian_matrix_ad(const ZetaCoords& zeta, const Chart& chart);
Scalar jacobian_det_ad(const ZetaCoords& zeta, const Chart& chart);

bool delta_identity_check(const Chart& chart);
// zeta^-_k -> t^{-ht} zeta^-_k, zeta^+_k -> t^{ht} zeta^+_k sends
// l_j -> t^{-ht} l_j and u_j -> t^{ht} u_j
bool weight_grading_check(const Chart& chart, const ZetaCoords& zeta, const Scalar& t);

// 1 + zeta^- zeta^+
Scalar pair_factor(const Pair& p);

// GL only: sigma[k] is the row of the nonzero entry of column k in the
// Birkhoff representative, recovered from ranks of top-left blocks
std::vector<int> detect_stratum_gl(const QMatrix& g);

}  // namespace rsf
