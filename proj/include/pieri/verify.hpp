#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pieri/expansion.hpp"
#include "pieri/weyl.hpp"

namespace pieri {

// First failing instance of an identity, fully serialized; empty fields are
// unused for the identity in question.
struct Counterexample {
  std::string lambda;
  std::string w;
  std::string i;
  std::string mu;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct VerificationReport {
  std::string identity;
  std::string root_system;
  std::string params;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

// "s1s2..." (1-based), or "e" for the identity
std::string word_str(std::span<const int> word);

// grid enumeration, lexicographic
std::vector<Weight> dominant_box(const RootSystem& rs, int box);
std::vector<Weight> symmetric_box(const RootSystem& rs, int box);

// Y^lambda T_{w^{-1}} = sum_eta T_{v(eta,w)^{-1}} Y^{eta(1)} on all monomials
// e^mu in the box, for every dominant lambda in the box and every w.
// Counterexamples are reported in canonical grid order regardless of jobs.
VerificationReport verify_theorem(const WeylGroup& W, int lambda_box, int mu_box,
                                  int jobs = 1);

// Y^lambda T_i = T_i Y^{s_i lambda} + chevalley_divided_term(lambda, i), for
// lambda over the symmetric box
VerificationReport verify_commutation(const WeylGroup& W, int lambda_box, int mu_box,
                                      int jobs = 1);

// T_i^2 = T_i, braid relations for every Coxeter pair, and the defining
// relation (e^{alpha_i} - 1) T_i(e^lambda) = e^{lambda+alpha_i} - e^{s_i lambda}
VerificationReport verify_operator_algebra(const WeylGroup& W, int lambda_box, int mu_box);

// |T^lambda| against the Weyl dimension formula, the full character against
// T_{w_0}(e^lambda), and the LS invariants of every generated path
VerificationReport verify_dimensions(const WeylGroup& W, int lambda_box);

// e_i f_i = id on dom(f_i), f_i e_i = id on dom(e_i), closure of T^lambda
VerificationReport verify_crystal_roundtrip(const WeylGroup& W, int lambda_box);

// expand(lambda, 1) = {1 -> x^lambda}; coefficients positive; total mass
// equals |T^lambda_{<= w}| for every w
VerificationReport verify_corollary(const WeylGroup& W, int lambda_box);

// String-by-string operator identity
//   sum_{eta in S} T_{v(eta,w)^{-1}} Y^{eta(1)} = T_{v(pi,w)^{-1}} Y^{pi(1)} T_i
// over every maximal f_i-string S (head pi) of T^lambda lying inside
// T^lambda_{<= w}.  Chains truncated by the restriction carry no final
// directions for their missing members and are counted as skipped.
VerificationReport verify_string_lemma(const WeylGroup& W, const Weight& lambda, EltId w,
                                       int i, int mu_box);

VerificationReport verify_string_lemma_grid(const WeylGroup& W, int lambda_box, int mu_box);

}  // namespace pieri
