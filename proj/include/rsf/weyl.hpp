#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "rsf/rootsys.hpp"

namespace rsf {

// Signed permutation of the lambda basis: w(l_i) = sign[i] * l_{image[i]}.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, int k);

  int dim() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  const std::vector<int>& sign() const { return sign_; }

  RootVec act(const RootVec& v) const;
  // (*this) o other
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.image_ == b.image_ && a.sign_ == b.sign_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.image_ != b.image_ ? a.image_ < b.image_ : a.sign_ < b.sign_;
  }

 private:
  std::vector<int> image_;
  std::vector<int> sign_;
};

// word[0] = r_1 acts first
using Word = std::vector<int>;

struct RootOrdering {
  std::vector<int> roots;  // indices into positive_roots()
  Word word;
};

struct OrderingCheck {
  bool valid = false;
  int failed_at = 0;  // 1-based
  Word word;
};

WeylElement evaluate_word(const RootSystem& rs, const Word& word);
int length(const RootSystem& rs, const WeylElement& w);
WeylElement longest_element(const RootSystem& rs);

bool is_reduced(const RootSystem& rs, const Word& word);
bool is_reduced_for_w0(const RootSystem& rs, const Word& word);

RootOrdering ordering_from_word(const RootSystem& rs, const Word& word);
OrderingCheck validate_ordering(const RootSystem& rs, const std::vector<RootVec>& ordering);

Word canonical_word(Family family, int rank);
Word word_reverse(const RootSystem& rs, const Word& word);
Word word_conjugate_w0(const RootSystem& rs, const Word& word);

// Lemma-1 sequence for a general w: gamma_j chosen (smallest label first)
// with w r_1...r_{j-1} gamma_j > 0; the result is a reduced word of w0 w.
Word stratum_word(const RootSystem& rs, const WeylElement& w);

std::vector<Word> enumerate_reduced_words(const RootSystem& rs, const WeylElement& w,
                                          std::size_t cap);
std::uint64_t count_reduced_words(const RootSystem& rs, const WeylElement& w);
Word random_reduced_word(const RootSystem& rs, std::mt19937_64& rng);

mpz_class stanley_count(int n);
// the B/C formula exactly as printed, read with n = r
mpq_class kraskiewicz_printed(int r);
// (r^2)! / product of hook lengths of the r x r square
mpz_class square_hook_count(int r);

}  // namespace rsf
