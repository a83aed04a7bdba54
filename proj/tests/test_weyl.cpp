#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rsf/error.hpp"
#include "rsf/weyl.hpp"

using namespace rsf;

namespace {

RootVec vecs(std::initializer_list<int> v) { return RootVec(v); }

std::vector<RootVec> roots_of(const RootSystem& rs, const std::vector<int>& idx) {
  std::vector<RootVec> out;
  for (int a : idx) out.push_back(rs.root(a));
  return out;
}

// brute force: closure of the generators
std::set<WeylElement> whole_group(const RootSystem& rs) {
  std::set<WeylElement> seen{WeylElement::identity(rs)};
  std::vector<WeylElement> todo{WeylElement::identity(rs)};
  while (!todo.empty()) {
    WeylElement w = todo.back();
    todo.pop_back();
    for (int k = 1; k <= rs.rank(); ++k) {
      WeylElement v = WeylElement::simple_reflection(rs, k).compose(w);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return seen;
}

}  // namespace

TEST(Weyl, ActionExamples) {
  RootSystem a2(Family::A, 2);
  EXPECT_EQ(WeylElement::simple_reflection(a2, 1).act(vecs({0, 1, -1})), vecs({1, 0, -1}));
  EXPECT_EQ(WeylElement::identity(a2).act(vecs({1, 0, -1})), vecs({1, 0, -1}));
  RootSystem b2(Family::B, 2);
  EXPECT_EQ(WeylElement::simple_reflection(b2, 1).act(vecs({1, 0})), vecs({-1, 0}));
  RootSystem d3(Family::D, 3);
  WeylElement s1 = WeylElement::simple_reflection(d3, 1);
  EXPECT_EQ(s1.act(vecs({1, 0, 0})), vecs({0, -1, 0}));
  EXPECT_EQ(s1.act(vecs({0, 0, 1})), vecs({0, 0, 1}));
}

TEST(Weyl, ReflectionsAreInvolutions) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs(f, 3);
    for (int k = 1; k <= 3; ++k) {
      WeylElement s = WeylElement::simple_reflection(rs, k);
      EXPECT_EQ(s.compose(s), WeylElement::identity(rs));
      EXPECT_EQ(length(rs, s), 1);
    }
  }
}

TEST(Weyl, Lengths) {
  RootSystem a2(Family::A, 2);
  EXPECT_EQ(length(a2, WeylElement::identity(a2)), 0);
  EXPECT_EQ(length(a2, longest_element(a2)), 3);
  EXPECT_EQ(longest_element(a2).image(), std::vector<int>({2, 1, 0}));
  RootSystem b2(Family::B, 2);
  EXPECT_EQ(length(b2, longest_element(b2)), 4);
  RootSystem c2(Family::C, 2);
  WeylElement w0 = longest_element(c2);
  EXPECT_EQ(w0.act(vecs({1, 0})), vecs({-1, 0}));
  EXPECT_EQ(w0.act(vecs({0, 1})), vecs({0, -1}));
  // brute force: the unique element of maximal length in the 8-element group
  auto group = whole_group(c2);
  EXPECT_EQ(group.size(), 8u);
  int best = -1;
  WeylElement arg;
  for (const auto& w : group)
    if (length(c2, w) > best) {
      best = length(c2, w);
      arg = w;
    }
  EXPECT_EQ(arg, w0);
}

TEST(Weyl, LengthSubadditivityAndParity) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 3}}) {
    RootSystem rs(f, r);
    auto group = whole_group(rs);
    std::vector<WeylElement> g(group.begin(), group.end());
    for (std::size_t i = 0; i < g.size(); i += 3) {
      for (std::size_t j = 0; j < g.size(); j += 5)
        EXPECT_LE(length(rs, g[i].compose(g[j])), length(rs, g[i]) + length(rs, g[j]));
      for (int k = 1; k <= r; ++k)
        EXPECT_EQ(std::abs(length(rs, WeylElement::simple_reflection(rs, k).compose(g[i])) -
                           length(rs, g[i])),
                  1);
    }
  }
}

TEST(Weyl, OrderingFromWordExamples) {
  RootSystem a2(Family::A, 2);
  RootOrdering o = ordering_from_word(a2, {1, 2, 1});
  EXPECT_EQ(roots_of(a2, o.roots),
            (std::vector<RootVec>{vecs({1, -1, 0}), vecs({1, 0, -1}), vecs({0, 1, -1})}));
  for (int k = 1; k <= 2; ++k)
    EXPECT_EQ(ordering_from_word(a2, {k}).roots, std::vector<int>({a2.simple_indices()[k - 1]}));
  EXPECT_THROW(ordering_from_word(a2, {1, 1}), Error);
  try {
    ordering_from_word(a2, {1, 2, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_word);
    EXPECT_EQ(e.index(), 4);
  }
}

TEST(Weyl, ValidateOrdering) {
  RootSystem a2(Family::A, 2);
  OrderingCheck ok = validate_ordering(a2, {vecs({1, -1, 0}), vecs({1, 0, -1}), vecs({0, 1, -1})});
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.word, Word({1, 2, 1}));
  OrderingCheck bad = validate_ordering(a2, {vecs({1, 0, -1}), vecs({1, -1, 0}), vecs({0, 1, -1})});
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.failed_at, 1);
  RootSystem c3(Family::C, 3);
  Word c3w = {1, 2, 1, 2, 3, 2, 1, 2, 3};
  OrderingCheck c = validate_ordering(c3, roots_of(c3, ordering_from_word(c3, c3w).roots));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.word, c3w);
}

TEST(Weyl, CanonicalWords) {
  EXPECT_EQ(canonical_word(Family::A, 3), Word({1, 2, 1, 3, 2, 1}));
  EXPECT_EQ(canonical_word(Family::A, 1), Word({1}));
  EXPECT_EQ(canonical_word(Family::B, 2), Word({1, 2, 1, 2}));
  EXPECT_EQ(canonical_word(Family::C, 3), Word({1, 2, 1, 2, 3, 2, 1, 2, 3}));
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = f == Family::D ? 2 : 1; r <= 6; ++r) {
      RootSystem rs(f, r);
      Word w = canonical_word(f, r);
      EXPECT_TRUE(is_reduced_for_w0(rs, w)) << family_letter(f) << r;
      EXPECT_EQ(static_cast<int>(w.size()), rs.size());
      // compatibility with the inclusions: a prefix is the smaller rank's word
      if (r > (f == Family::D ? 2 : 1)) {
        Word small = canonical_word(f, r - 1);
        EXPECT_TRUE(std::equal(small.begin(), small.end(), w.begin()));
      }
    }
}

TEST(Weyl, ReverseAndConjugate) {
  RootSystem a2(Family::A, 2);
  Word rev = word_reverse(a2, {1, 2, 1});
  EXPECT_EQ(rev, Word({1, 2, 1}));
  RootOrdering o = ordering_from_word(a2, rev);
  EXPECT_EQ(roots_of(a2, o.roots),
            (std::vector<RootVec>{vecs({1, -1, 0}), vecs({1, 0, -1}), vecs({0, 1, -1})}));
  RootSystem a1(Family::A, 1);
  EXPECT_EQ(word_reverse(a1, {1}), Word({1}));
  EXPECT_THROW(word_reverse(a2, {1, 2}), Error);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::A, 3}, {Family::B, 3},
                                                         {Family::C, 2}, {Family::D, 4}}) {
    RootSystem rs(f, r);
    Word w = canonical_word(f, r);
    std::vector<int> fwd = ordering_from_word(rs, w).roots;
    std::vector<int> back = ordering_from_word(rs, word_reverse(rs, word_conjugate_w0(rs, w))).roots;
    std::reverse(back.begin(), back.end());
    EXPECT_EQ(fwd, back) << family_letter(f) << r;
  }
}

TEST(Weyl, EnumerationExamples) {
  RootSystem a2(Family::A, 2);
  auto words = enumerate_reduced_words(a2, longest_element(a2), 100);
  EXPECT_EQ(words, (std::vector<Word>{{1, 2, 1}, {2, 1, 2}}));
  EXPECT_EQ(enumerate_reduced_words(a2, WeylElement::identity(a2), 10), std::vector<Word>{Word{}});
  RootSystem a3(Family::A, 3);
  auto w3 = enumerate_reduced_words(a3, longest_element(a3), 100);
  EXPECT_EQ(w3.size(), 16u);
  EXPECT_TRUE(std::is_sorted(w3.begin(), w3.end()));
  EXPECT_EQ(std::set<Word>(w3.begin(), w3.end()).size(), 16u);
  EXPECT_THROW(enumerate_reduced_words(a3, longest_element(a3), 5), Error);
}

TEST(Weyl, EveryReducedWordGivesABijectiveOrdering) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                                         {Family::B, 2}, {Family::B, 3}, {Family::C, 2},
                                                         {Family::C, 3}, {Family::D, 2}, {Family::D, 3}}) {
    RootSystem rs(f, r);
    for (const Word& w : enumerate_reduced_words(rs, longest_element(rs), 100000)) {
      RootOrdering o = ordering_from_word(rs, w);
      std::set<int> distinct(o.roots.begin(), o.roots.end());
      ASSERT_EQ(static_cast<int>(distinct.size()), rs.size());
      OrderingCheck c = validate_ordering(rs, roots_of(rs, o.roots));
      ASSERT_TRUE(c.valid);
      ASSERT_EQ(c.word, w);
    }
  }
}

TEST(Weyl, Counts) {
  EXPECT_EQ(stanley_count(2), 1);
  EXPECT_EQ(stanley_count(3), 2);
  EXPECT_EQ(stanley_count(5), 768);
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs(Family::A, n - 1);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(count_reduced_words(rs, longest_element(rs)))),
              stanley_count(n));
  }
  EXPECT_EQ(square_hook_count(2), 2);
  EXPECT_EQ(square_hook_count(3), 42);
  RootSystem b3(Family::B, 3);
  EXPECT_EQ(count_reduced_words(b3, longest_element(b3)), 42u);
}

TEST(Weyl, RandomReducedWordsAreReduced) {
  std::mt19937_64 rng(9);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs(f, 4);
    for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_reduced_for_w0(rs, random_reduced_word(rs, rng)));
  }
}

TEST(Weyl, StratumWordLengths) {
  RootSystem a3(Family::A, 3);
  for (const WeylElement& w : whole_group(a3)) {
    Word s = stratum_word(a3, w);
    EXPECT_EQ(static_cast<int>(s.size()), a3.size() - length(a3, w));
    EXPECT_TRUE(is_reduced(a3, s));
  }
}

TEST(Weyl, DoublingChainHasTwoCompatibleSequences) {
  // GL(2) in GL(4) in GL(6); the block s_2 s_1 s_0 s_-1 s_-2 s_-1 s_0 s_1 s_2
  // may swap s_-1 s_-2 s_-1 for s_-2 s_-1 s_-2. Letter s_j is label 3 - j.
  RootSystem a5(Family::A, 5);
  Word head = {3, 2, 3, 4, 3, 2};
  Word tail1 = {1, 2, 3, 4, 5, 4, 3, 2, 1};
  Word tail2 = {1, 2, 3, 5, 4, 5, 3, 2, 1};
  Word w1 = head, w2 = head;
  w1.insert(w1.end(), tail1.begin(), tail1.end());
  w2.insert(w2.end(), tail2.begin(), tail2.end());
  EXPECT_NE(w1, w2);
  EXPECT_TRUE(is_reduced_for_w0(a5, w1));
  EXPECT_TRUE(is_reduced_for_w0(a5, w2));
  // truncations give w0 of GL(2) and GL(4) in the middle slots
  EXPECT_EQ(evaluate_word(a5, {3}).image(), std::vector<int>({0, 1, 3, 2, 4, 5}));
  EXPECT_EQ(evaluate_word(a5, head).image(), std::vector<int>({0, 4, 3, 2, 1, 5}));
}
