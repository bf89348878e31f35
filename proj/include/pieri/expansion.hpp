#pragma once

#include <map>
#include <vector>

#include "pieri/demazure.hpp"
#include "pieri/group_ring.hpp"
#include "pieri/paths.hpp"
#include "pieri/weyl.hpp"

namespace pieri {

// The product of a line-bundle class y^lambda with the Schubert class indexed
// by w, expanded over Schubert classes: terms[v] is the x-tagged coefficient
// sum_{eta : v(eta,w) = v} x^{eta(1)} over the restricted path model.
struct Expansion {
  Weight lambda;
  EltId w = 0;
  std::map<EltId, GroupRingElt> terms;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

Expansion expand(const WeylGroup& W, const Weight& lambda, EltId w);

// Y^lambda T_{w^{-1}} (f): multiply T_{w^{-1}}(f) by e^lambda
GroupRingElt theorem_lhs(const WeylGroup& W, const Weight& lambda, EltId w,
                         const GroupRingElt& f);

// sum over eta in T^lambda_{<= w} of T_{v(eta,w)^{-1}} (e^{eta(1)} f)
GroupRingElt theorem_rhs(const WeylGroup& W, const Weight& lambda, EltId w,
                         const GroupRingElt& f);

// coefficient integer masses (the absolute case: every x^mu |-> 1)
std::map<EltId, Int> specialize_absolute(const Expansion& ex);

// Partition of a path set into maximal f_i-chains within the set.  Heads are
// members with no f_i-preimage inside the set; each chain follows f_i while
// it stays a member.  Chains are listed by head in set order.
std::vector<std::vector<LSPath>> string_decompose(const RootSystem& rs, const PathSet& ps,
                                                  int i);

}  // namespace pieri
