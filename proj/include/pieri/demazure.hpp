#pragma once

#include <span>

#include "pieri/group_ring.hpp"
#include "pieri/rootdata.hpp"
#include "pieri/weyl.hpp"

namespace pieri {

// Demazure operator T_i on Z[P], defined by
//   T_i(e^lambda) = (e^{lambda+alpha_i} - e^{s_i lambda}) / (e^{alpha_i} - 1)
// and extended Z-linearly.  Implemented by the finite geometric sums: with
// k = <lambda, alpha_i^vee>,
//   k >= 0:  sum_{j=0..k}   e^{lambda - j alpha_i}
//   k = -1:  0
//   k <= -2: -sum_{j=1..-k-1} e^{lambda + j alpha_i}
// Rejects x-tagged input (the operator lives on the fiber lattice).
GroupRingElt demazure_apply(const RootSystem& rs, int i, const GroupRingElt& f);

// T_w(f) for a reduced word w = s_{i_1} ... s_{i_p}, read as the operator
// product T_{i_1} T_{i_2} ... T_{i_p}: the rightmost (last) letter acts
// first.  Well defined because the T_i satisfy the braid relations; the word
// is checked to be reduced and rejected otherwise.
GroupRingElt demazure_word(const WeylGroup& W, std::span<const int> word, const GroupRingElt& f);

// multiplication operator Y^lambda: f |-> e^lambda f
GroupRingElt y_mul(const Weight& lambda, const GroupRingElt& f);

// The finite expansion of (Y^lambda - Y^{s_i lambda}) / (1 - Y^{-alpha_i}),
// the correction term of the commutation relation
//   Y^lambda T_i = T_i Y^{s_i lambda} + ((Y^lambda - Y^{s_i lambda})/(1 - Y^{-alpha_i})).
// With k = <lambda, alpha_i^vee>:
//   k >= 1:  sum_{j=0..k-1} e^{lambda - j alpha_i}
//   k = 0:   0
//   k <= -1: -sum_{j=1..-k} e^{lambda + j alpha_i}
GroupRingElt chevalley_divided_term(const RootSystem& rs, const Weight& lambda, int i);

}  // namespace pieri
