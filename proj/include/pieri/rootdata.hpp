#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "pieri/weight.hpp"

namespace pieri {

using Int = boost::multiprecision::cpp_int;

// A positive root carried in three coordinate systems at once:
//   fw               -- fundamental-weight coordinates (as a Weight),
//   in_simple_roots  -- coefficients c_j with  alpha = sum_j c_j alpha_j,
//   coroot_in_simple -- coefficients d_j with  alpha^vee = sum_j d_j alpha_j^vee.
// The last row makes <mu, alpha^vee> = sum_j d_j mu_j for mu in fw coordinates.
struct PositiveRoot {
  Weight fw;
  std::vector<int> in_simple_roots;
  std::vector<int> coroot_in_simple;
};

// Cartan datum for one finite type at fixed rank.
//
// Conventions (Bourbaki numbering throughout):
//   cartan()[i][j] = <alpha_j, alpha_i^vee>, so column j holds the
//   fundamental-weight coordinates of alpha_j.
//   A_l (l>=1): path graph 1-2-...-l.
//   B_l (l>=2): 1-...-(l-1)=>l, alpha_l short.
//   C_l (l>=2): 1-...-(l-1)<=l, alpha_l long.
//   D_4: alpha_2 is the branch node.
//   F_4: 1-2=>3-4, alpha_1, alpha_2 long.
//   G_2: alpha_1 short, alpha_2 long; cartan [[2,-3],[-1,2]].
class RootSystem {
 public:
  // throws std::invalid_argument for anything that is not a supported
  // finite type at rank <= 4 (E needs rank >= 6, D needs rank 4, ...)
  static RootSystem build(char type_letter, int rank);

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // <lambda, alpha_i^vee>; i is 0-based
  int pairing(const Weight& lambda, int i) const;

  // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
  Weight reflect(const Weight& lambda, int i) const;

  Weight simple_root(int i) const;         // column i of the Cartan matrix
  Weight fundamental_weight(int i) const;  // unit vector
  Weight rho() const;                      // (1,...,1)
  Weight zero() const;

  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

  // J = { i : <lambda, alpha_i^vee> = 0 }; requires lambda dominant
  std::vector<int> stabilizer_generators(const Weight& lambda) const;

  // prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>, exact
  Int weyl_dimension(const Weight& lambda) const;

  void check_weight(const Weight& w) const;

 private:
  RootSystem() = default;
  void enumerate_positive_roots();

  char type_ = '?';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<PositiveRoot> positive_roots_;
};

}  // namespace pieri
