#include "rsf/matrep.hpp"

#include "rsf/error.hpp"

namespace rsf {

NilpotentExp make_exp_table(const QMatrix& x) {
  NilpotentExp t;
  const std::size_t n = x.rows();
  QMatrix power = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * x * Scalar::rational(1, static_cast<long>(k));
    if (power.is_zero()) break;
    std::vector<NilpotentExp::Entry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!power(i, j).is_zero())
          entries.push_back({static_cast<int>(i), static_cast<int>(j), power(i, j)});
    t.powers.push_back(std::move(entries));
  }
  return t;
}

namespace {

QMatrix unit_matrix(int n, int p, int q) {
  QMatrix m(n, n);
  m(p, q) = 1;
  return m;
}

[[noreturn]] void internal(const std::string& what) {
  throw Error(ErrorKind::invalid_input, "internal realization error: " + what);
}

}  // namespace

Realization::Realization(RootSystem rs) : rs_(std::move(rs)) {
  const int r = rs_.rank();
  const int dim = rs_.dim();
  const Family fam = rs_.family();
  switch (fam) {
    case Family::A: n_ = r + 1; break;
    case Family::B: n_ = 2 * r + 1; break;
    default: n_ = 2 * r; break;
  }

  // basis order e_r, ..., e_1, (e_0), e_-1, ..., e_-r
  for (int p = 0; p < n_; ++p) {
    RootVec w(dim, 0);
    if (fam == Family::A) {
      w[p] = 1;
    } else if (p < r) {
      w[r - 1 - p] = 1;
    } else if (fam == Family::B) {
      if (p > r) w[p - r - 1] = -1;
    } else {
      w[p - r] = -1;
    }
    weights_.push_back(w);
  }

  twist_.assign(n_, Scalar(1));
  if (fam == Family::B) {
    for (int p = 0; p < r; ++p) twist_[p] = 4;
    twist_[r] = 2;
  }

  if (fam != Family::A) {
    form_ = QMatrix(n_, n_);
    for (int p = 0; p < n_; ++p)
      form_(p, n_ - 1 - p) = (fam == Family::C && p >= r) ? -1 : 1;
  }

  for (int k = 1; k <= r; ++k) {
    const RootVec& alpha = rs_.simple_root(k);
    int p = -1, q = -1;
    for (int a = 0; a < n_ && p < 0; ++a)
      for (int b = a + 1; b < n_; ++b) {
        RootVec diff(dim);
        for (int i = 0; i < dim; ++i) diff[i] = weights_[a][i] - weights_[b][i];
        if (diff == alpha) {
          p = a;
          q = b;
          break;
        }
      }
    if (p < 0) internal("no matrix position for a simple root");

    QMatrix x = unit_matrix(n_, p, q);
    if (fam != Family::A) {
      QMatrix proj = x + theta_lie_form(x);
      if (proj.is_zero()) internal("root vector projects to zero");
      x = proj == x * Scalar(2) ? x : proj;
    }
    QMatrix fx = x.transpose();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!fx(i, j).is_zero()) fx(i, j) *= twist_[j] / twist_[i];
    QMatrix hx = commutator(x, fx);
    if (!is_diagonal(hx) || evaluate_root(alpha, hx) != Scalar(2))
      internal("sl2 normalization failed");
    e_.push_back(x);
    f_.push_back(fx);
    h_.push_back(hx);
  }
  for (int k = 1; k <= r; ++k) {
    QMatrix s(2, 2);
    s(0, 1) = -1;
    s(1, 0) = 1;
    rep_.push_back(iota_simple(k, s));
    QMatrix si(2, 2);
    si(0, 1) = Scalar::i();
    si(1, 0) = Scalar::i();
    rep_i_.push_back(iota_simple(k, si));
  }
}

QMatrix Realization::theta_lie_form(const QMatrix& x) const {
  // -J^{-1} X^T J, the involution fixing the form's Lie algebra
  QMatrix jinv = inverse(form_);
  return -(jinv * x.transpose() * form_);
}

QMatrix Realization::theta_lie(const QMatrix& x) const {
  QMatrix t = x.transpose();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!t(i, j).is_zero()) t(i, j) *= twist_[j] / twist_[i];
  return -t;
}

Scalar Realization::evaluate_root(const RootVec& alpha, const QMatrix& h) const {
  Scalar v;
  for (int p = 0; p < n_; ++p) {
    // lambda_i(h) is read at the basis vector of weight +lambda_i
    for (int i = 0; i < rs_.dim(); ++i)
      if (weights_[p][i] == 1 && alpha[i] != 0) v += h(p, p) * Scalar(alpha[i]);
  }
  return v;
}

bool Realization::in_lie_algebra(const QMatrix& x) const {
  if (rs_.family() == Family::A) return true;
  return (x.transpose() * form_ + form_ * x).is_zero();
}

bool Realization::preserves_form(const QMatrix& g) const {
  if (rs_.family() == Family::A) return true;
  return g.transpose() * form_ * g == form_;
}

QMatrix Realization::iota_simple(int k, const QMatrix& m) const {
  if (k < 1 || k > rs_.rank()) throw Error(ErrorKind::invalid_input, "simple index out of range", k);
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::invalid_input, "iota needs a 2x2 matrix");
  const Scalar &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
  Scalar det = a * d - b * c;
  if (!det.is_one()) throw Error(ErrorKind::invalid_input, "iota needs determinant 1", 0, det);
  if (a.is_zero()) {
    // m = (m L(1)) L(-1) with the first factor having nonzero corner
    QMatrix ml(2, 2);
    ml(0, 0) = a + b;
    ml(0, 1) = b;
    ml(1, 0) = c + d;
    ml(1, 1) = d;
    return iota_simple(k, ml) * exp_nilpotent(-f(k));
  }
  // m = [[1,0],[c/a,1]] diag(a, 1/a) [[1,b/a],[0,1]]
  std::vector<Scalar> diag(n_);
  const QMatrix& hk = h(k);
  for (int p = 0; p < n_; ++p) {
    const mpq_class& hp = hk(p, p).re();
    if (hp.get_den() != 1) internal("non-integral coroot");
    diag[p] = a.pow(hp.get_num().get_si());
  }
  return exp_nilpotent(f(k) * (c / a)) * QMatrix::diagonal(diag) * exp_nilpotent(e(k) * (b / a));
}

std::shared_ptr<const Realization> realize(const RootSystem& rs) {
  return std::make_shared<const Realization>(rs);
}

std::vector<QMatrix> weyl_rep_chain(const Realization& real, const Word& word) {
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j] < 1 || word[j] > real.root_system().rank())
      throw Error(ErrorKind::invalid_word, "letter out of range", static_cast<int>(j + 1));
  std::vector<QMatrix> chain{QMatrix::identity(real.size())};
  for (int k : word) chain.push_back(real.weyl_rep(k) * chain.back());
  return chain;
}

std::vector<Generators> conjugated_generators(const Realization& real, const Word& word) {
  auto chain = weyl_rep_chain(real, word);
  std::vector<Generators> out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    QMatrix winv = inverse(chain[j]);
    int k = word[j];
    out.push_back({winv * real.f(k) * chain[j], winv * real.e(k) * chain[j],
                   winv * real.h(k) * chain[j]});
  }
  return out;
}

QMatrix weyl_representative(const Realization& real, const WeylElement& w) {
  const RootSystem& rs = real.root_system();
  // peel first-acting letters: w(gamma_k) < 0 means w = (w s_k) s_k
  Word word;
  WeylElement cur = w;
  for (bool found = true; found;) {
    found = false;
    for (int k = 1; k <= rs.rank(); ++k)
      if (rs.sign_of(cur.act(rs.simple_root(k))) < 0) {
        word.push_back(k);
        cur = cur.compose(WeylElement::simple_reflection(rs, k));
        found = true;
        break;
      }
  }
  return weyl_rep_chain(real, word).back();
}

namespace {

// a monomial matrix maps basis vector col to +-basis vector row
struct Monomial {
  std::vector<int> row_of_col;
  std::vector<Scalar> val;
};

Monomial as_monomial(const QMatrix& m) {
  Monomial out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int row = -1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) {
        if (row >= 0) internal("Weyl representative is not monomial");
        row = static_cast<int>(i);
      }
    if (row < 0) internal("Weyl representative is singular");
    out.row_of_col.push_back(row);
    out.val.push_back(m(row, j));
  }
  return out;
}

}  // namespace

Chart::Chart(std::shared_ptr<const Realization> real, const Word& word)
    : real_(std::move(real)), word_(word) {
  const RootSystem& rs = real_->root_system();
  RootOrdering ord = ordering_from_word(rs, word);
  tau_ = ord.roots;
  chain_ = weyl_rep_chain(*real_, word);
  const int n = length();
  const int N = real_->size();
  for (int j = 0; j < n; ++j) {
    const QMatrix& w = chain_[j];
    QMatrix winv = inverse(w);
    int k = word[j];
    f_.push_back(winv * real_->f(k) * w);
    e_.push_back(winv * real_->e(k) * w);
    h_.push_back(winv * real_->h(k) * w);
    fexp_.push_back(make_exp_table(f_.back()));
    eexp_.push_back(make_exp_table(e_.back()));
    std::vector<int> hd;
    for (int p = 0; p < N; ++p) hd.push_back(static_cast<int>(h_.back()(p, p).re().get_num().get_si()));
    hdiag_.push_back(hd);

    // (w M w^{-1})(p, q) = val[a] * M(a, b) / val[b] with w e_a = val[a] e_p
    Monomial mono = as_monomial(w);
    std::vector<int> col_of_row(N);
    for (int a = 0; a < N; ++a) col_of_row[mono.row_of_col[a]] = a;

    const QMatrix& fg = real_->f(k);
    int p = -1, q = -1;
    for (int i = 0; i < N && p < 0; ++i)
      for (int jj = 0; jj < N; ++jj)
        if (!fg(i, jj).is_zero()) {
          p = i;
          q = jj;
          break;
        }
    int a = col_of_row[p], b = col_of_row[q];
    lpeel_.push_back({a, b, mono.val[a] / (mono.val[b] * fg(p, q))});

    const QMatrix& eg = real_->e(k);
    p = -1;
    for (int i = N - 1; i >= 0 && p < 0; --i)
      for (int jj = N - 1; jj >= 0; --jj)
        if (!eg(i, jj).is_zero()) {
          p = i;
          q = jj;
          break;
        }
    a = col_of_row[p];
    b = col_of_row[q];
    upeel_.push_back({a, b, mono.val[a] / (mono.val[b] * eg(p, q))});
  }
  c_.assign(n, std::vector<int>(n, 0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) c_[k][j] = rs.pairing(tau_[k], tau_[j]);
}

}  // namespace rsf
