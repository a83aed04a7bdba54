#include "rsf/rootsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "rsf/error.hpp"

namespace rsf {

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw Error(ErrorKind::invalid_input, "unknown family '" + s + "'");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::string root_str(const RootVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "l" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

RootVec unit(int dim, int i, int c = 1) {
  RootVec v(dim, 0);
  v[i] = c;
  return v;
}

RootVec combo(int dim, int i, int ci, int j, int cj) {
  RootVec v(dim, 0);
  v[i] += ci;
  v[j] += cj;
  return v;
}

std::vector<RootVec> simple_roots(Family f, int r, int dim) {
  std::vector<RootVec> s;
  switch (f) {
    case Family::A:
      for (int k = 0; k < r; ++k) s.push_back(combo(dim, k, 1, k + 1, -1));
      break;
    case Family::B:
    case Family::C:
      s.push_back(unit(dim, 0, f == Family::B ? 1 : 2));
      for (int k = 1; k < r; ++k) s.push_back(combo(dim, k, 1, k - 1, -1));
      break;
    case Family::D:
      s.push_back(combo(dim, 0, 1, 1, 1));
      s.push_back(combo(dim, 1, 1, 0, -1));
      for (int k = 2; k < r; ++k) s.push_back(combo(dim, k, 1, k - 1, -1));
      break;
  }
  return s;
}

std::vector<RootVec> all_positive(Family f, int r, int dim) {
  std::vector<RootVec> out;
  if (f == Family::A) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) out.push_back(combo(dim, i, 1, j, -1));
    return out;
  }
  for (int j = 0; j < r; ++j) {
    if (f == Family::B) out.push_back(unit(dim, j));
    if (f == Family::C) out.push_back(unit(dim, j, 2));
    for (int i = 0; i < j; ++i) {
      out.push_back(combo(dim, j, 1, i, 1));
      out.push_back(combo(dim, j, 1, i, -1));
    }
  }
  return out;
}

// Exact solve of  sum_k c_k s_k = v  for integer c (system is consistent by
// construction; columns are linearly independent).
std::vector<int> solve_simple(const std::vector<RootVec>& s, const RootVec& v) {
  const int dim = static_cast<int>(v.size());
  const int r = static_cast<int>(s.size());
  std::vector<std::vector<mpq_class>> a(dim, std::vector<mpq_class>(r + 1));
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < r; ++k) a[i][k] = s[k][i];
    a[i][r] = v[i];
  }
  int row = 0;
  std::vector<int> pivot_col(dim, -1);
  for (int col = 0; col < r && row < dim; ++col) {
    int p = row;
    while (p < dim && sgn(a[p][col]) == 0) ++p;
    if (p == dim) continue;
    std::swap(a[p], a[row]);
    mpq_class inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int i = 0; i < dim; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      mpq_class f = a[i][col];
      for (int j = 0; j <= r; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  std::vector<int> c(r, 0);
  for (int i = 0; i < dim; ++i) {
    if (pivot_col[i] < 0) {
      if (sgn(a[i][r]) != 0) throw Error(ErrorKind::invalid_input, "vector outside root lattice");
      continue;
    }
    mpq_class q = a[i][r];
    if (q.get_den() != 1) throw Error(ErrorKind::invalid_input, "non-integral simple coefficients");
    c[pivot_col[i]] = static_cast<int>(q.get_num().get_si());
  }
  return c;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (rank < 1 || (family == Family::D && rank < 2))
    throw Error(ErrorKind::invalid_input, std::string("unsupported rank for family ") +
                                              family_letter(family));
  if (rank > 40) throw Error(ErrorKind::invalid_input, "rank too large");
  dim_ = family == Family::A ? rank + 1 : rank;

  std::vector<RootVec> simple = simple_roots(family, rank, dim_);
  std::vector<RootVec> roots = all_positive(family, rank, dim_);

  std::vector<std::pair<std::vector<int>, RootVec>> keyed;
  for (const auto& v : roots) keyed.emplace_back(solve_simple(simple, v), v);
  auto ht = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    int hx = ht(x.first), hy = ht(y.first);
    if (hx != hy) return hx < hy;
    return x.first > y.first;
  });

  for (auto& [c, v] : keyed) {
    for (int x : c)
      if (x < 0) throw Error(ErrorKind::invalid_input, "internal: root not positive");
    lookup_[v] = static_cast<int>(roots_.size());
    roots_.push_back(v);
    height_.push_back(ht(c));
    coeffs_.push_back(c);
  }
  simple_label_.assign(roots_.size(), 0);
  for (std::size_t k = 0; k < simple.size(); ++k) {
    int a = lookup_.at(simple[k]);
    simple_.push_back(a);
    simple_label_[a] = static_cast<int>(k + 1);
  }

  const int n = size();
  pairing_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int num = 2 * inner(roots_[a], roots_[b]);
      int den = inner(roots_[b], roots_[b]);
      pairing_[a][b] = num / den;
    }
  for (int a = 0; a < n; ++a) delta_.push_back(delta_coroot_coefficients(a));
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
  int s = 0;
  for (int i = 0; i < dim_; ++i) s += a[i] * b[i];
  return s;
}

int RootSystem::pairing(const RootVec& alpha, const RootVec& beta) const {
  if (sign_of(alpha) == 0 || sign_of(beta) == 0)
    throw Error(ErrorKind::invalid_input, "pairing: argument is not a root");
  return 2 * inner(alpha, beta) / inner(beta, beta);
}

int RootSystem::delta_half_sum(int a) const {
  int s = 0;
  for (int b = 0; b < size(); ++b) s += pairing_[b][a];
  return s / 2;
}

int RootSystem::delta_coroot_coefficients(int a) const {
  // alpha^v = sum_i k_i (gamma_i, gamma_i)/(alpha, alpha) gamma_i^v
  const RootVec& alpha = roots_[a];
  int aa = inner(alpha, alpha);
  int num = 0;
  for (int k = 0; k < rank_; ++k) {
    const RootVec& g = roots_[simple_[k]];
    num += coeffs_[a][k] * inner(g, g);
  }
  return num / aa;
}

std::optional<int> RootSystem::index_of(const RootVec& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::sign_of(const RootVec& v) const {
  if (static_cast<int>(v.size()) != dim_) return 0;
  if (lookup_.count(v)) return 1;
  RootVec neg(v);
  for (auto& x : neg) x = -x;
  return lookup_.count(neg) ? -1 : 0;
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> c(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i][j] = pairing_[simple_[i]][simple_[j]];
  return c;
}

RootSystem build_root_system(Family family, int rank) { return RootSystem(family, rank); }

}  // namespace rsf
