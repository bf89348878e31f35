#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pieri/rootdata.hpp"
#include "pieri/weight.hpp"

namespace pieri {

// Elements are addressed by index into the enumeration of W, which is sorted
// by (length, canonical reduced word); in particular id 0 is the identity.
using EltId = std::uint32_t;

using GenMask = std::uint32_t;  // bit i set <=> simple index i belongs to J

// A coset w W_J, stored by its minimal-length representative.
struct ParabolicCoset {
  EltId min_rep = 0;
  GenMask gens = 0;

  friend bool operator==(const ParabolicCoset&, const ParabolicCoset&) = default;
};

GenMask mask_from_gens(std::span<const int> gens);
std::vector<int> gens_from_mask(GenMask mask);

// Full enumeration of a finite Weyl group of rank <= 4, with lengths,
// canonical (lexicographically least) reduced words, Bruhat order closure,
// reflections, and parabolic subgroup tables.  Immutable once built.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return action_.size(); }

  EltId identity() const { return 0; }
  EltId longest() const { return longest_; }
  EltId simple(int i) const;

  EltId mult(EltId a, EltId b) const;
  EltId inverse(EltId a) const { return inverse_[a]; }

  int length(EltId a) const { return length_[a]; }
  const std::vector<int>& word(EltId a) const { return word_[a]; }

  // product of simple reflections, letters 0-based; throws on bad letters
  EltId from_word(std::span<const int> w) const;
  bool is_reduced(std::span<const int> w) const;

  Weight act(EltId a, const Weight& lambda) const;

  // row-major l x l matrix; column j = image of omega_j
  std::vector<std::vector<int>> action_matrix(EltId a) const;

  bool bruhat_leq(EltId u, EltId v) const { return bruhat_[v].test(u); }

  const std::vector<EltId>& reflections() const { return reflections_; }

  // ---- parabolic cosets -------------------------------------------------

  const std::vector<EltId>& parabolic_elements(GenMask mask) const;

  // wW_J with minimal representative (right J-descents stripped)
  ParabolicCoset coset_of(EltId w, GenMask mask) const;

  // induced order via minimal representatives; throws on mismatched J
  bool coset_leq(const ParabolicCoset& a, const ParabolicCoset& b) const;

  std::vector<EltId> coset_elements(const ParabolicCoset& c) const;

  // Greedy lift of a strictly decreasing coset chain below the bound w:
  // t_1 = max{t in chain[0] : t <= w}, t_k = max{t in chain[k-1] : t < t_{k-1}}.
  // Each step must have a unique maximum; anything else throws std::logic_error.
  std::vector<EltId> maximal_lift(EltId w, std::span<const ParabolicCoset> chain) const;

 private:
  using Mat = std::vector<int>;  // row-major rank x rank

  Mat simple_matrix(int i) const;
  static Mat mat_mult(const Mat& a, const Mat& b, int n);
  EltId id_of(const Mat& m) const;
  void check_elt(EltId a) const;

  RootSystem rs_;
  std::vector<Mat> action_;
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<EltId> inverse_;
  std::vector<std::vector<EltId>> right_simple_;  // a * s_i
  std::map<Mat, EltId> index_;
  std::vector<boost::dynamic_bitset<>> bruhat_;  // bruhat_[v] = down-set of v
  std::vector<EltId> reflections_;
  std::vector<std::vector<EltId>> parabolic_;  // indexed by GenMask
  EltId longest_ = 0;
};

}  // namespace pieri
