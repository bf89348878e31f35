#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pieri/rational.hpp"
#include "pieri/rootdata.hpp"
#include "pieri/weight.hpp"
#include "pieri/weyl.hpp"

namespace pieri {

// A Lakshmibai-Seshadri path of shape lambda, encoded by segment directions
// (weights in the W-orbit of lambda) and rational breakpoints
// 0 = a_0 < a_1 < ... < a_r = 1.  The path is
//   pi(t) = (t - a_{j-1}) dirs[j] + sum_{i<j} (a_i - a_{i-1}) dirs[i]
// on [a_{j-1}, a_j].  Adjacent directions are kept distinct (merged), and the
// endpoint is required to be a lattice point.
struct LSPath {
  Weight lambda;
  std::vector<Weight> dirs;
  std::vector<Rational> breaks;  // size dirs.size() + 1

  friend bool operator==(const LSPath&, const LSPath&) = default;
};

bool operator<(const LSPath& a, const LSPath& b);

// checks the shape-independent invariants; throws std::invalid_argument
void check_path_encoding(const LSPath& p);

// pi_lambda(t) = t lambda; requires lambda dominant
LSPath straight_path(const RootSystem& rs, const Weight& lambda);

// exact piecewise-linear evaluation; 0 <= t <= 1
std::vector<Rational> evaluate(const LSPath& p, const Rational& t);

// pi(1), asserted to be a lattice point
Weight endpoint(const LSPath& p);

// Littelmann's lowering operator f_i.  With h(t) = <pi(t), alpha_i^vee> and
// m = min h: undefined when h(1) - m < 1; otherwise the path is reflected by
// s_i between q (the last time h = m) and p (the first later time h = m+1)
// and translated by -alpha_i after p.  Collinear segments are merged.
std::optional<LSPath> root_op_f(const RootSystem& rs, int i, const LSPath& pi);

// raising operator, the mirror construction; e_i(f_i(pi)) = pi on dom(f_i)
std::optional<LSPath> root_op_e(const RootSystem& rs, int i, const LSPath& pi);

struct PathSet {
  Weight lambda;
  std::vector<LSPath> paths;  // deduplicated, in generation order
};

// Path model for one dominant shape: closure of pi_lambda under the f_i,
// initial/final directions through the W lambda <-> W/W_lambda bijection,
// and the <= w restriction.
class PathModel {
 public:
  // keeps a reference to W; the group must outlive the model
  PathModel(const WeylGroup& W, Weight lambda);

  const WeylGroup& group() const { return W_; }
  const Weight& lambda() const { return lambda_; }
  GenMask stabilizer_mask() const { return mask_; }

  LSPath straight() const { return straight_path(W_.root_system(), lambda_); }

  // breadth-first closure of {pi_lambda} under all f_i, deterministic order:
  // discovery order with parents scanned in order and operators in index order
  PathSet generate(std::size_t cap = 1 << 20) const;

  // coset of { u : u lambda = dirs[0] }
  ParabolicCoset initial_direction(const LSPath& p) const;

  // coset for one orbit weight; throws if the weight is not in W lambda
  ParabolicCoset direction_coset(const Weight& orbit_weight) const;

  std::vector<ParabolicCoset> coset_chain(const LSPath& p) const;

  // { pi : iota(pi) <= w W_lambda }, order preserved
  PathSet restrict_le(const PathSet& ps, EltId w) const;

  // v(pi, w): last element of the maximal lift of the coset chain below w;
  // requires iota(pi) <= w W_lambda
  EltId final_direction(const LSPath& p, EltId w) const;

  // full invariant check (orbit membership, strict coset decrease, breaks,
  // integral endpoint); throws std::logic_error on violation
  void validate(const LSPath& p) const;

 private:
  const WeylGroup& W_;
  Weight lambda_;
  GenMask mask_;
  std::map<Weight, ParabolicCoset> orbit_coset_;
};

}  // namespace pieri
