#pragma once

#include <map>

#include "pieri/rootdata.hpp"
#include "pieri/weight.hpp"
#include "pieri/weyl.hpp"

namespace pieri {

// Two monomial lattices sharing one representation: y-monomials span the
// fiber representation ring Z[P], x-monomials model the base coefficients
// formally (same monoid law).  Mixing tags in ring operations is an error.
enum class Lattice { y, x };

inline const char* lattice_name(Lattice t) { return t == Lattice::y ? "y" : "x"; }

// Finite formal sum of monomials e^lambda with exact integer coefficients.
// No zero coefficient is ever stored; terms iterate in lexicographic order
// of the exponent, which makes serialization and comparison deterministic.
class GroupRingElt {
 public:
  explicit GroupRingElt(Lattice tag = Lattice::y) : tag_(tag) {}

  static GroupRingElt monomial(const Weight& lambda, Lattice tag, Int coeff = 1);

  Lattice tag() const { return tag_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Weight, Int>& terms() const { return terms_; }

  Int coefficient(const Weight& lambda) const;

  // sum of all coefficients (the x |-> 1 specialization)
  Int mass() const;

  GroupRingElt& add_term(const Weight& lambda, const Int& coeff);

  GroupRingElt& operator+=(const GroupRingElt& o);
  GroupRingElt& operator-=(const GroupRingElt& o);
  GroupRingElt& operator*=(const Int& k);

  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  friend GroupRingElt operator*(GroupRingElt a, const Int& k) { return a *= k; }
  friend GroupRingElt operator*(const Int& k, GroupRingElt a) { return a *= k; }
  friend GroupRingElt operator-(GroupRingElt a) { return a *= Int(-1); }
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

  std::string str() const;

 private:
  void check_tag(const GroupRingElt& o) const;

  Lattice tag_;
  std::map<Weight, Int> terms_;
};

// monomial-wise W-action e^lambda |-> e^{w lambda} (a ring automorphism)
GroupRingElt act(const WeylGroup& W, EltId w, const GroupRingElt& f);

// sum_{mu in W lambda} e^mu, the monomial symmetric function; W-invariant
GroupRingElt orbit_sum(const WeylGroup& W, const Weight& dominant, Lattice tag = Lattice::y);

}  // namespace pieri
