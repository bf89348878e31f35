#include "pieri/expansion.hpp"

#include <set>

namespace pieri {

Expansion expand(const WeylGroup& W, const Weight& lambda, EltId w) {
  PathModel model(W, lambda);
  PathSet all = model.generate();
  PathSet restricted = model.restrict_le(all, w);
  Expansion ex;
  ex.lambda = lambda;
  ex.w = w;
  for (const auto& eta : restricted.paths) {
    EltId v = model.final_direction(eta, w);
    auto [it, inserted] = ex.terms.emplace(v, GroupRingElt(Lattice::x));
    it->second.add_term(endpoint(eta), 1);
  }
  return ex;
}

GroupRingElt theorem_lhs(const WeylGroup& W, const Weight& lambda, EltId w,
                         const GroupRingElt& f) {
  return y_mul(lambda, demazure_word(W, W.word(W.inverse(w)), f));
}

GroupRingElt theorem_rhs(const WeylGroup& W, const Weight& lambda, EltId w,
                         const GroupRingElt& f) {
  PathModel model(W, lambda);
  PathSet restricted = model.restrict_le(model.generate(), w);
  GroupRingElt out(f.tag());
  for (const auto& eta : restricted.paths) {
    EltId v = model.final_direction(eta, w);
    out += demazure_word(W, W.word(W.inverse(v)), y_mul(endpoint(eta), f));
  }
  return out;
}

std::map<EltId, Int> specialize_absolute(const Expansion& ex) {
  std::map<EltId, Int> out;
  for (const auto& [v, coeff] : ex.terms) out.emplace(v, coeff.mass());
  return out;
}

std::vector<std::vector<LSPath>> string_decompose(const RootSystem& rs, const PathSet& ps,
                                                  int i) {
  std::set<LSPath> members(ps.paths.begin(), ps.paths.end());
  std::set<LSPath> has_parent;
  for (const auto& p : ps.paths) {
    auto child = root_op_f(rs, i, p);
    if (child && members.contains(*child)) has_parent.insert(*child);
  }
  std::vector<std::vector<LSPath>> strings;
  for (const auto& head : ps.paths) {
    if (has_parent.contains(head)) continue;
    std::vector<LSPath> chain{head};
    for (;;) {
      auto next = root_op_f(rs, i, chain.back());
      if (!next || !members.contains(*next)) break;
      chain.push_back(std::move(*next));
    }
    strings.push_back(std::move(chain));
  }
  return strings;
}

}  // namespace pieri
