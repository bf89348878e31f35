#include "pieri/demazure.hpp"

#include <stdexcept>

namespace pieri {

GroupRingElt demazure_apply(const RootSystem& rs, int i, const GroupRingElt& f) {
  if (f.tag() != Lattice::y)
    throw std::invalid_argument("demazure_apply: operator is defined on y-tagged elements");
  const Weight alpha = rs.simple_root(i);
  GroupRingElt out(Lattice::y);
  for (const auto& [lambda, c] : f.terms()) {
    int k = rs.pairing(lambda, i);
    if (k >= 0) {
      Weight mu = lambda;
      for (int j = 0; j <= k; ++j) {
        out.add_term(mu, c);
        mu -= alpha;
      }
    } else if (k <= -2) {
      Weight mu = lambda + alpha;
      for (int j = 1; j <= -k - 1; ++j) {
        out.add_term(mu, -c);
        mu += alpha;
      }
    }
    // k == -1 contributes nothing
  }
  return out;
}

GroupRingElt demazure_word(const WeylGroup& W, std::span<const int> word,
                           const GroupRingElt& f) {
  if (!W.is_reduced(word))
    throw std::invalid_argument("demazure_word: word is not reduced");
  GroupRingElt out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = demazure_apply(W.root_system(), *it, out);
  return out;
}

GroupRingElt y_mul(const Weight& lambda, const GroupRingElt& f) {
  GroupRingElt out(f.tag());
  for (const auto& [mu, c] : f.terms()) out.add_term(lambda + mu, c);
  return out;
}

GroupRingElt chevalley_divided_term(const RootSystem& rs, const Weight& lambda, int i) {
  const Weight alpha = rs.simple_root(i);
  const int k = rs.pairing(lambda, i);
  GroupRingElt out(Lattice::y);
  if (k >= 1) {
    Weight mu = lambda;
    for (int j = 0; j <= k - 1; ++j) {
      out.add_term(mu, 1);
      mu -= alpha;
    }
  } else if (k <= -1) {
    Weight mu = lambda + alpha;
    for (int j = 1; j <= -k; ++j) {
      out.add_term(mu, -1);
      mu += alpha;
    }
  }
  return out;
}

}  // namespace pieri
