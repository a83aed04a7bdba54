#include "rsf/weyl.hpp"

#include <algorithm>
#include <map>

#include "rsf/error.hpp"

namespace rsf {

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  for (int i = 0; i < rs.dim(); ++i) {
    w.image_.push_back(i);
    w.sign_.push_back(1);
  }
  return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank())
    throw Error(ErrorKind::invalid_input, "simple index out of range", k);
  const RootVec& g = rs.simple_root(k);
  int gg = rs.inner(g, g);
  WeylElement w;
  for (int i = 0; i < rs.dim(); ++i) {
    // s(l_i) = l_i - 2(l_i, g)/(g, g) g
    RootVec v(rs.dim(), 0);
    v[i] = 1;
    int c = 2 * g[i];
    for (int j = 0; j < rs.dim(); ++j) v[j] -= c * g[j] / gg;
    int pos = -1;
    for (int j = 0; j < rs.dim(); ++j)
      if (v[j] != 0) {
        if (pos >= 0 || std::abs(v[j]) != 1)
          throw Error(ErrorKind::invalid_input, "internal: reflection is not a signed permutation");
        pos = j;
      }
    w.image_.push_back(pos);
    w.sign_.push_back(v[pos]);
  }
  return w;
}

RootVec WeylElement::act(const RootVec& v) const {
  RootVec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[image_[i]] += sign_[i] * v[i];
  return out;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
  WeylElement r;
  for (int i = 0; i < o.dim(); ++i) {
    r.image_.push_back(image_[o.image_[i]]);
    r.sign_.push_back(o.sign_[i] * sign_[o.image_[i]]);
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.image_.assign(dim(), 0);
  r.sign_.assign(dim(), 1);
  for (int i = 0; i < dim(); ++i) {
    r.image_[image_[i]] = i;
    r.sign_[image_[i]] = sign_[i];
  }
  return r;
}

namespace {

void check_letters(const RootSystem& rs, const Word& word) {
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j] < 1 || word[j] > rs.rank())
      throw Error(ErrorKind::invalid_word, "letter out of range", static_cast<int>(j + 1));
}

std::vector<WeylElement> reflections(const RootSystem& rs) {
  std::vector<WeylElement> s;
  for (int k = 1; k <= rs.rank(); ++k) s.push_back(WeylElement::simple_reflection(rs, k));
  return s;
}

}  // namespace

WeylElement evaluate_word(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  auto s = reflections(rs);
  WeylElement w = WeylElement::identity(rs);
  for (int k : word) w = s[k - 1].compose(w);
  return w;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int n = 0;
  for (const auto& a : rs.positive_roots())
    if (rs.sign_of(w.act(a)) < 0) ++n;
  return n;
}

WeylElement longest_element(const RootSystem& rs) {
  auto s = reflections(rs);
  WeylElement w = WeylElement::identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int k = 1; k <= rs.rank(); ++k)
      if (rs.sign_of(w.act(rs.simple_root(k))) > 0) {
        w = w.compose(s[k - 1]);
        grew = true;
        break;
      }
  }
  return w;
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  return length(rs, evaluate_word(rs, word)) == static_cast<int>(word.size());
}

bool is_reduced_for_w0(const RootSystem& rs, const Word& word) {
  return static_cast<int>(word.size()) == rs.size() && is_reduced(rs, word);
}

RootOrdering ordering_from_word(const RootSystem& rs, const Word& word) {
  check_letters(rs, word);
  auto s = reflections(rs);
  RootOrdering out;
  out.word = word;
  // prefix = r_1 ... r_{j-1} as a map on roots
  WeylElement prefix = WeylElement::identity(rs);
  for (std::size_t j = 0; j < word.size(); ++j) {
    RootVec tau = prefix.act(rs.simple_root(word[j]));
    auto idx = rs.index_of(tau);
    if (!idx) throw Error(ErrorKind::invalid_word, "word is not reduced", static_cast<int>(j + 1));
    out.roots.push_back(*idx);
    prefix = prefix.compose(s[word[j] - 1]);
  }
  return out;
}

OrderingCheck validate_ordering(const RootSystem& rs, const std::vector<RootVec>& ordering) {
  OrderingCheck res;
  auto s = reflections(rs);
  std::vector<bool> seen(rs.size(), false);
  // inv = r_{j-1} ... r_1, so gamma_j = inv(tau_j)
  WeylElement inv = WeylElement::identity(rs);
  for (std::size_t j = 0; j < ordering.size(); ++j) {
    res.failed_at = static_cast<int>(j + 1);
    auto idx = rs.index_of(ordering[j]);
    if (!idx || seen[*idx]) return res;
    seen[*idx] = true;
    auto g = rs.index_of(inv.act(ordering[j]));
    if (!g || rs.simple_label(*g) == 0) return res;
    int k = rs.simple_label(*g);
    res.word.push_back(k);
    inv = s[k - 1].compose(inv);
  }
  if (static_cast<int>(ordering.size()) != rs.size()) {
    res.failed_at = static_cast<int>(ordering.size()) + 1;
    return res;
  }
  res.valid = true;
  res.failed_at = 0;
  return res;
}

Word canonical_word(Family family, int rank) {
  RootSystem rs(family, rank);
  Word w;
  switch (family) {
    case Family::A:
      for (int k = 1; k <= rank; ++k)
        for (int i = k; i >= 1; --i) w.push_back(i);
      break;
    case Family::B:
    case Family::C:
      w.push_back(1);
      for (int k = 2; k <= rank; ++k) {
        for (int i = k; i >= 1; --i) w.push_back(i);
        for (int i = 2; i <= k; ++i) w.push_back(i);
      }
      break;
    case Family::D:
      w.push_back(1);
      w.push_back(2);
      for (int k = 3; k <= rank; ++k) {
        for (int i = k; i >= 3; --i) w.push_back(i);
        if (k % 2 == 1) {
          w.push_back(2);
          w.push_back(1);
        } else {
          w.push_back(1);
          w.push_back(2);
        }
        for (int i = 3; i <= k; ++i) w.push_back(i);
      }
      break;
  }
  return w;
}

Word word_reverse(const RootSystem& rs, const Word& word) {
  if (!is_reduced_for_w0(rs, word))
    throw Error(ErrorKind::invalid_word, "word is not a reduced word for w0");
  return Word(word.rbegin(), word.rend());
}

Word word_conjugate_w0(const RootSystem& rs, const Word& word) {
  if (!is_reduced_for_w0(rs, word))
    throw Error(ErrorKind::invalid_word, "word is not a reduced word for w0");
  // w0 s_gamma w0 = s_{-w0 gamma}
  WeylElement w0 = longest_element(rs);
  std::vector<int> conj(rs.rank() + 1, 0);
  for (int k = 1; k <= rs.rank(); ++k) {
    RootVec v = w0.act(rs.simple_root(k));
    for (auto& x : v) x = -x;
    conj[k] = rs.simple_label(rs.index_of(v).value());
  }
  Word out;
  for (int k : word) out.push_back(conj[k]);
  return out;
}

Word stratum_word(const RootSystem& rs, const WeylElement& w) {
  auto s = reflections(rs);
  Word word;
  WeylElement cur = w;
  for (;;) {
    int pick = 0;
    for (int k = 1; k <= rs.rank() && !pick; ++k)
      if (rs.sign_of(cur.act(rs.simple_root(k))) > 0) pick = k;
    if (!pick) break;
    word.push_back(pick);
    cur = cur.compose(s[pick - 1]);
  }
  return word;
}

namespace {

struct Enumerator {
  const RootSystem& rs;
  std::vector<WeylElement> s;
  std::size_t cap;
  std::vector<Word> out;
  Word cur;

  // w o s_a is shorter than w iff w(gamma_a) < 0, and then s_a is a valid
  // first-acting letter; ascending letters give lexicographic output.
  void run(const WeylElement& w) {
    bool any = false;
    for (int k = 1; k <= rs.rank(); ++k) {
      if (rs.sign_of(w.act(rs.simple_root(k))) >= 0) continue;
      any = true;
      cur.push_back(k);
      run(w.compose(s[k - 1]));
      cur.pop_back();
    }
    if (!any) {
      if (out.size() >= cap)
        throw Error(ErrorKind::budget_exceeded, "reduced word enumeration exceeded its budget",
                    static_cast<int>(cap));
      out.push_back(cur);
    }
  }
};

}  // namespace

std::vector<Word> enumerate_reduced_words(const RootSystem& rs, const WeylElement& w,
                                          std::size_t cap) {
  Enumerator e{rs, reflections(rs), cap, {}, {}};
  e.run(w);
  return e.out;
}

std::uint64_t count_reduced_words(const RootSystem& rs, const WeylElement& w) {
  auto s = reflections(rs);
  std::map<WeylElement, std::uint64_t> memo;
  auto rec = [&](auto&& self, const WeylElement& x) -> std::uint64_t {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    bool any = false;
    for (int k = 1; k <= rs.rank(); ++k) {
      if (rs.sign_of(x.act(rs.simple_root(k))) >= 0) continue;
      any = true;
      total += self(self, x.compose(s[k - 1]));
    }
    if (!any) total = 1;
    memo.emplace(x, total);
    return total;
  };
  return rec(rec, w);
}

Word random_reduced_word(const RootSystem& rs, std::mt19937_64& rng) {
  auto s = reflections(rs);
  WeylElement w = longest_element(rs);
  Word word;
  for (;;) {
    std::vector<int> desc;
    for (int k = 1; k <= rs.rank(); ++k)
      if (rs.sign_of(w.act(rs.simple_root(k))) < 0) desc.push_back(k);
    if (desc.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, desc.size() - 1);
    int k = desc[pick(rng)];
    word.push_back(k);
    w = w.compose(s[k - 1]);
  }
  return word;
}

namespace {

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class ipow(long b, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

}  // namespace

mpz_class stanley_count(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_input, "stanley_count needs n >= 2");
  mpz_class den = 1;
  for (int k = 1; k <= n - 1; ++k) den *= ipow(2 * k - 1, n - k);
  return factorial(static_cast<long>(n) * (n - 1) / 2) / den;
}

mpq_class kraskiewicz_printed(int r) {
  if (r < 1) throw Error(ErrorKind::invalid_input, "rank must be positive");
  const int n = r;
  mpz_class den = 1;
  for (int i = 1; i <= n; ++i) den *= ipow(2 * i - 1, n - i);
  for (int j = 0; j <= n - 3; ++j)
    for (int k = 1; k <= n - j - 2; ++k) den *= 2 * (j + 2 * k);
  mpq_class q(factorial(static_cast<long>(r) * r), den);
  q.canonicalize();
  return q;
}

mpz_class square_hook_count(int r) {
  mpz_class den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) den *= (r - 1 - i) + (r - 1 - j) + 1;
  return factorial(static_cast<long>(r) * r) / den;
}

}  // namespace rsf
