#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsf {

enum class Family { A, B, C, D };

Family parse_family(const std::string& s);
char family_letter(Family f);

// integer coefficients over the lambda basis
using RootVec = std::vector<int>;

std::string root_str(const RootVec& v);

class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  // number of lambda coordinates: rank+1 for A, rank otherwise
  int dim() const { return dim_; }

  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<RootVec>& positive_roots() const { return roots_; }
  const RootVec& root(int a) const { return roots_.at(a); }

  // simple_indices()[k-1] is the position of alpha_k in positive_roots()
  const std::vector<int>& simple_indices() const { return simple_; }
  const RootVec& simple_root(int k) const { return roots_[simple_[k - 1]]; }
  // 1-based simple label of root a, or 0
  int simple_label(int a) const { return simple_label_[a]; }

  int pairing(int a, int b) const { return pairing_[a][b]; }
  int pairing(const RootVec& alpha, const RootVec& beta) const;
  int height(int a) const { return height_[a]; }
  int delta(int a) const { return delta_[a]; }
  const std::vector<int>& simple_coefficients(int a) const { return coeffs_[a]; }

  // the two independent routes to delta(h_alpha)
  int delta_half_sum(int a) const;
  int delta_coroot_coefficients(int a) const;

  std::optional<int> index_of(const RootVec& v) const;
  // +1 for a positive root, -1 for a negative root, 0 otherwise
  int sign_of(const RootVec& v) const;
  int inner(const RootVec& a, const RootVec& b) const;
  // Cartan matrix restricted to simple roots, a_ij = alpha_i(h_alpha_j)
  std::vector<std::vector<int>> cartan_matrix() const;

 private:
  Family family_;
  int rank_;
  int dim_;
  std::vector<RootVec> roots_;
  std::vector<int> simple_;
  std::vector<int> simple_label_;
  std::vector<std::vector<int>> pairing_;
  std::vector<int> height_;
  std::vector<int> delta_;
  std::vector<std::vector<int>> coeffs_;
  std::map<RootVec, int> lookup_;
};

RootSystem build_root_system(Family family, int rank);

}  // namespace rsf
