#include "pieri/group_ring.hpp"

#include <set>
#include <stdexcept>

namespace pieri {

GroupRingElt GroupRingElt::monomial(const Weight& lambda, Lattice tag, Int coeff) {
  GroupRingElt f(tag);
  f.add_term(lambda, coeff);
  return f;
}

Int GroupRingElt::coefficient(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Int(0) : it->second;
}

Int GroupRingElt::mass() const {
  Int m = 0;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

GroupRingElt& GroupRingElt::add_term(const Weight& lambda, const Int& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void GroupRingElt::check_tag(const GroupRingElt& o) const {
  if (tag_ != o.tag_)
    throw std::invalid_argument(std::string("lattice tag mismatch: ") + lattice_name(tag_) +
                                " vs " + lattice_name(o.tag_));
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o) {
  check_tag(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o) {
  check_tag(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
  a.check_tag(b);
  GroupRingElt out(a.tag());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  return out;
}

std::string GroupRingElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + lattice_name(tag_) + "^" + w.str();
  }
  return s;
}

GroupRingElt act(const WeylGroup& W, EltId w, const GroupRingElt& f) {
  GroupRingElt out(f.tag());
  for (const auto& [mu, c] : f.terms()) out.add_term(W.act(w, mu), c);
  return out;
}

GroupRingElt orbit_sum(const WeylGroup& W, const Weight& dominant, Lattice tag) {
  W.root_system().check_weight(dominant);
  if (!dominant.is_dominant()) throw std::invalid_argument("orbit_sum requires a dominant weight");
  std::set<Weight> orbit{dominant};
  std::vector<Weight> frontier{dominant};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (int i = 0; i < W.rank(); ++i) {
        Weight nu = W.root_system().reflect(mu, i);
        if (orbit.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }
  GroupRingElt out(tag);
  for (const auto& mu : orbit) out.add_term(mu, 1);
  return out;
}

}  // namespace pieri
