#pragma once

#include <memory>
#include <vector>

#include "rsf/matrix.hpp"
#include "rsf/rootsys.hpp"
#include "rsf/weyl.hpp"

namespace rsf {

// Sparse table for exp(x X) = sum_k x^k X^k / k! of a nilpotent X.
struct NilpotentExp {
  struct Entry {
    int row;
    int col;
    Scalar val;
  };
  std::vector<std::vector<Entry>> powers;  // powers[k-1] holds X^k / k!
};

NilpotentExp make_exp_table(const QMatrix& x);

// m <- exp(x X) m
template <class T>
void apply_exp_left(Matrix<T>& m, const NilpotentExp& e, const T& x) {
  if (ScalarTraits<T>::is_zero(x)) return;
  const std::size_t n = m.cols();
  // only the rows hit by some power of X change
  std::vector<int> slot(m.rows(), -1);
  std::vector<std::vector<T>> delta;
  T xk = x;
  for (std::size_t k = 0; k < e.powers.size(); ++k) {
    if (k > 0) xk = xk * x;
    for (const auto& en : e.powers[k]) {
      if (slot[en.row] < 0) {
        slot[en.row] = static_cast<int>(delta.size());
        delta.emplace_back(n);
      }
      std::vector<T>& out = delta[slot[en.row]];
      T c = xk * ScalarTraits<T>::from(en.val);
      for (std::size_t j = 0; j < n; ++j) {
        const T& y = m(en.col, j);
        if (!ScalarTraits<T>::is_zero(y)) out[j] += c * y;
      }
    }
  }
  for (std::size_t r = 0; r < slot.size(); ++r)
    if (slot[r] >= 0)
      for (std::size_t j = 0; j < n; ++j) m(r, j) += delta[slot[r]][j];
}

// m <- m exp(x X)
template <class T>
void apply_exp_right(Matrix<T>& m, const NilpotentExp& e, const T& x) {
  if (ScalarTraits<T>::is_zero(x)) return;
  const std::size_t n = m.rows();
  std::vector<int> slot(m.cols(), -1);
  std::vector<std::vector<T>> delta;
  T xk = x;
  for (std::size_t k = 0; k < e.powers.size(); ++k) {
    if (k > 0) xk = xk * x;
    for (const auto& en : e.powers[k]) {
      if (slot[en.col] < 0) {
        slot[en.col] = static_cast<int>(delta.size());
        delta.emplace_back(n);
      }
      std::vector<T>& out = delta[slot[en.col]];
      T c = xk * ScalarTraits<T>::from(en.val);
      for (std::size_t i = 0; i < n; ++i) {
        const T& y = m(i, en.row);
        if (!ScalarTraits<T>::is_zero(y)) out[i] += y * c;
      }
    }
  }
  for (std::size_t c = 0; c < slot.size(); ++c)
    if (slot[c] >= 0)
      for (std::size_t i = 0; i < n; ++i) m(i, c) += delta[slot[c]][i];
}

class Realization {
 public:
  explicit Realization(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int size() const { return n_; }
  // weight of the p-th basis vector over the lambda basis
  const RootVec& basis_weight(int p) const { return weights_[p]; }
  // invariant bilinear form; empty for family A
  const QMatrix& form() const { return form_; }
  // diagonal twist of the Cartan involution, Theta(X) = -D^{-1} X^T D
  const std::vector<Scalar>& twist() const { return twist_; }

  const QMatrix& e(int k) const { return e_.at(k - 1); }
  const QMatrix& f(int k) const { return f_.at(k - 1); }
  const QMatrix& h(int k) const { return h_.at(k - 1); }
  // iota_k([[0,-1],[1,0]]), used for the conjugation chain
  const QMatrix& weyl_rep(int k) const { return rep_.at(k - 1); }
  // iota_k([[0,i],[i,0]])
  const QMatrix& weyl_rep_imaginary(int k) const { return rep_i_.at(k - 1); }

  QMatrix iota_simple(int k, const QMatrix& m) const;

  // alpha(h) for diagonal h
  Scalar evaluate_root(const RootVec& alpha, const QMatrix& h) const;
  bool in_lie_algebra(const QMatrix& x) const;
  bool preserves_form(const QMatrix& g) const;
  QMatrix theta_lie(const QMatrix& x) const;
  // -J^{-1} X^T J
  QMatrix theta_lie_form(const QMatrix& x) const;

  // Theta(g) = D^{-1} (g^{-1})^T D
  template <class T>
  Matrix<T> theta(const Matrix<T>& g) const {
    Matrix<T> t = inverse(g).transpose();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!ScalarTraits<T>::is_zero(t(i, j)))
          t(i, j) = t(i, j) * ScalarTraits<T>::from(twist_[j] / twist_[i]);
    return t;
  }

 private:
  RootSystem rs_;
  int n_;
  std::vector<RootVec> weights_;
  QMatrix form_;
  std::vector<Scalar> twist_;
  std::vector<QMatrix> e_, f_, h_, rep_, rep_i_;
};

// Root-space data attached to a reduced word.
class Chart {
 public:
  Chart(std::shared_ptr<const Realization> real, const Word& word);

  const Realization& realization() const { return *real_; }
  const RootSystem& root_system() const { return real_->root_system(); }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  // all indices below are 0-based positions j = 0..n-1 in the word
  int tau(int j) const { return tau_[j]; }
  const RootVec& tau_root(int j) const { return root_system().root(tau_[j]); }
  const QMatrix& chain(int j) const { return chain_[j]; }  // w'_j, j = 0..n
  const QMatrix& f(int j) const { return f_[j]; }
  const QMatrix& e(int j) const { return e_[j]; }
  const QMatrix& h(int j) const { return h_[j]; }
  const NilpotentExp& f_exp(int j) const { return fexp_[j]; }
  const NilpotentExp& e_exp(int j) const { return eexp_[j]; }
  // integer diagonal of h_{tau_j}
  const std::vector<int>& h_diag(int j) const { return hdiag_[j]; }
  // tau_k(h_{tau_j})
  int pairing(int k, int j) const { return c_[k][j]; }
  int delta(int j) const { return root_system().delta(tau_[j]); }
  int height(int j) const { return root_system().height(tau_[j]); }

  // l_j = factor * m(row, col) reads the next ordered-exp coordinate
  struct Peel {
    int row;
    int col;
    Scalar factor;
  };
  const Peel& lower_peel(int j) const { return lpeel_[j]; }
  const Peel& upper_peel(int j) const { return upeel_[j]; }

 private:
  std::shared_ptr<const Realization> real_;
  Word word_;
  std::vector<int> tau_;
  std::vector<QMatrix> chain_, f_, e_, h_;
  std::vector<NilpotentExp> fexp_, eexp_;
  std::vector<std::vector<int>> hdiag_;
  std::vector<std::vector<int>> c_;
  std::vector<Peel> lpeel_, upeel_;
};

std::shared_ptr<const Realization> realize(const RootSystem& rs);

std::vector<QMatrix> weyl_rep_chain(const Realization& real, const Word& word);

struct Generators {
  QMatrix f;
  QMatrix e;
  QMatrix h;
};
std::vector<Generators> conjugated_generators(const Realization& real, const Word& word);

// representative of w built from the chain representatives
QMatrix weyl_representative(const Realization& real, const WeylElement& w);

}  // namespace rsf
