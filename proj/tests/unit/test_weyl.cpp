#include <doctest.h>

#include <algorithm>
#include <set>

#include "pieri/weyl.hpp"

using namespace pieri;

namespace {

WeylGroup make(const char* name) {
  return WeylGroup(RootSystem::build(name[0], name[1] - '0'));
}

// independent Bruhat oracle: u <= v iff some subword of the canonical
// reduced word of v is a reduced word of u (checked by exhaustive subsets)
bool bruhat_by_subwords(const WeylGroup& W, EltId u, EltId v) {
  const auto& word = W.word(v);
  const std::size_t n = word.size();
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (bits & (std::size_t{1} << k)) sub.push_back(word[k]);
    if (W.from_word(sub) == u && W.is_reduced(sub)) return true;
  }
  return false;
}

// length as the number of positive roots sent negative, computed in
// root coordinates along the inverse word
int inversion_count(const WeylGroup& W, EltId w) {
  const auto& rs = W.root_system();
  int count = 0;
  for (const auto& alpha : rs.positive_roots()) {
    std::vector<int> c = alpha.in_simple_roots;
    const auto& word = W.word(W.inverse(w));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int i = *it;
      int k = 0;
      for (int j = 0; j < rs.rank(); ++j) k += rs.cartan()[i][j] * c[j];
      c[i] -= k;
    }
    bool neg = true;
    for (int x : c)
      if (x > 0) neg = false;
    if (neg) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("group orders") {
  CHECK(make("A1").size() == 2);
  CHECK(make("A2").size() == 6);
  CHECK(make("A3").size() == 24);
  CHECK(make("B2").size() == 8);
  CHECK(make("B3").size() == 48);
  CHECK(make("G2").size() == 12);
  CHECK(make("D4").size() == 192);
  CHECK(make("F4").size() == 1152);
}

TEST_CASE("enumeration order and canonical words") {
  auto W = make("A2");
  CHECK(W.length(W.identity()) == 0);
  CHECK(W.word(W.identity()).empty());
  // by length, then lexicographically: e, s1, s2, s1s2, s2s1, s1s2s1
  CHECK(W.word(1) == std::vector<int>{0});
  CHECK(W.word(2) == std::vector<int>{1});
  CHECK(W.word(3) == std::vector<int>{0, 1});
  CHECK(W.word(4) == std::vector<int>{1, 0});
  CHECK(W.word(5) == std::vector<int>{0, 1, 0});
  CHECK(W.longest() == 5);
  // s2s1s2 = s1s2s1 canonicalizes to the lexicographically least word
  CHECK(W.from_word(std::vector<int>{1, 0, 1}) == W.longest());
}

TEST_CASE("action examples") {
  auto W = make("A2");
  Weight omega1({1, 0});
  CHECK(W.act(W.identity(), omega1) == omega1);
  EltId s1s2 = W.from_word(std::vector<int>{0, 1});
  CHECK(W.act(s1s2, omega1) == Weight({-1, 1}));
  CHECK(W.act(W.longest(), omega1) == Weight({0, -1}));
}

TEST_CASE("act is a group action and matrices are integral automorphisms") {
  auto W = make("B2");
  for (EltId u = 0; u < W.size(); ++u)
    for (EltId v = 0; v < W.size(); ++v) {
      Weight probe({1, -2});
      CHECK(W.act(W.mult(u, v), probe) == W.act(u, W.act(v, probe)));
    }
}

TEST_CASE("length changes by one under right multiplication") {
  for (auto name : {"A2", "B2", "G2"}) {
    auto W = make(name);
    for (EltId w = 0; w < W.size(); ++w)
      for (int i = 0; i < W.rank(); ++i) {
        int d = W.length(W.mult(w, W.simple(i))) - W.length(w);
        CHECK(std::abs(d) == 1);
      }
  }
}

TEST_CASE("length equals inversion count") {
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto W = make(name);
    for (EltId w = 0; w < W.size(); ++w) CHECK(W.length(w) == inversion_count(W, w));
  }
}

TEST_CASE("applying the canonical word reproduces the element") {
  auto W = make("B3");
  for (EltId w = 0; w < W.size(); ++w) {
    CHECK(W.from_word(W.word(w)) == w);
    CHECK(W.is_reduced(W.word(w)));
  }
}

TEST_CASE("inverse and reflections") {
  auto W = make("G2");
  for (EltId w = 0; w < W.size(); ++w) {
    CHECK(W.mult(w, W.inverse(w)) == W.identity());
    CHECK(W.length(w) == W.length(W.inverse(w)));
  }
  CHECK(W.reflections().size() == W.root_system().positive_roots().size());
  for (EltId t : W.reflections()) CHECK(W.mult(t, t) == W.identity());
}

TEST_CASE("bruhat order basics") {
  auto W = make("A2");
  EltId s1 = W.simple(0), s2 = W.simple(1);
  EltId s1s2 = W.mult(s1, s2);
  for (EltId w = 0; w < W.size(); ++w) {
    CHECK(W.bruhat_leq(W.identity(), w));
    CHECK(W.bruhat_leq(w, W.longest()));
  }
  CHECK(W.bruhat_leq(s1, s1s2));
  CHECK_FALSE(W.bruhat_leq(s1, s2));
  CHECK_FALSE(W.bruhat_leq(s2, s1));
}

TEST_CASE("bruhat order agrees with the subword characterization") {
  for (auto name : {"A2", "B2", "G2"}) {
    auto W = make(name);
    for (EltId u = 0; u < W.size(); ++u)
      for (EltId v = 0; v < W.size(); ++v)
        CHECK(W.bruhat_leq(u, v) == bruhat_by_subwords(W, u, v));
  }
}

TEST_CASE("bruhat order is a partial order") {
  auto W = make("B2");
  for (EltId u = 0; u < W.size(); ++u) {
    CHECK(W.bruhat_leq(u, u));
    for (EltId v = 0; v < W.size(); ++v) {
      if (W.bruhat_leq(u, v) && W.bruhat_leq(v, u)) CHECK(u == v);
      for (EltId z = 0; z < W.size(); ++z)
        if (W.bruhat_leq(u, v) && W.bruhat_leq(v, z)) CHECK(W.bruhat_leq(u, z));
    }
  }
}

TEST_CASE("parabolic cosets: minimal representatives") {
  auto W = make("A2");
  GenMask J = mask_from_gens(std::vector<int>{1});  // {s2}
  EltId s1 = W.simple(0), s2 = W.simple(1);
  EltId s1s2 = W.mult(s1, s2);
  CHECK(W.coset_of(s1s2, J).min_rep == s1);
  CHECK(W.coset_of(W.identity(), J).min_rep == W.identity());
  CHECK(W.coset_of(s2, J).min_rep == W.identity());
  // min rep carries no descent in J
  for (EltId w = 0; w < W.size(); ++w) {
    EltId m = W.coset_of(w, J).min_rep;
    CHECK(W.length(W.mult(m, s2)) > W.length(m));
  }
}

TEST_CASE("coset order via minimal representatives") {
  auto W = make("A2");
  GenMask J = mask_from_gens(std::vector<int>{1});
  auto c = [&](EltId w) { return W.coset_of(w, J); };
  EltId s1 = W.simple(0), s2 = W.simple(1);
  EltId s2s1 = W.mult(s2, s1);
  CHECK(W.coset_leq(c(W.identity()), c(s1)));
  CHECK(W.coset_leq(c(s1), c(s2s1)));
  CHECK_FALSE(W.coset_leq(c(s2s1), c(s1)));
  GenMask other = mask_from_gens(std::vector<int>{0});
  CHECK_THROWS_AS(W.coset_leq(c(s1), W.coset_of(s1, other)), std::invalid_argument);
}

TEST_CASE("orbit-coset bijection for dominant weights") {
  auto W = make("B2");
  Weight lambda({0, 1});
  GenMask J = mask_from_gens(W.root_system().stabilizer_generators(lambda));
  std::map<Weight, std::set<EltId>> by_weight;
  for (EltId w = 0; w < W.size(); ++w)
    by_weight[W.act(w, lambda)].insert(W.coset_of(w, J).min_rep);
  // distinct weights <-> distinct cosets, same weight -> same coset
  CHECK(by_weight.size() == W.size() / W.parabolic_elements(J).size());
  std::set<EltId> reps;
  for (auto& [mu, cosets] : by_weight) {
    CHECK(cosets.size() == 1);
    reps.insert(*cosets.begin());
  }
  CHECK(reps.size() == by_weight.size());
}

TEST_CASE("maximal lift examples") {
  auto W = make("A2");
  GenMask J = mask_from_gens(std::vector<int>{1});
  EltId s1 = W.simple(0), s2 = W.simple(1);
  EltId s1s2 = W.mult(s1, s2);

  auto lift1 = W.maximal_lift(s1s2, std::vector<ParabolicCoset>{W.coset_of(s1, J)});
  CHECK(lift1 == std::vector<EltId>{s1s2});

  auto chain2 = std::vector<ParabolicCoset>{W.coset_of(s1, J), W.coset_of(W.identity(), J)};
  auto lift2 = W.maximal_lift(s1s2, chain2);
  CHECK(lift2 == std::vector<EltId>{s1s2, s2});

  // singleton coset for J = {}
  auto lift3 = W.maximal_lift(s2, std::vector<ParabolicCoset>{W.coset_of(W.identity(), 0)});
  CHECK(lift3 == std::vector<EltId>{W.identity()});
}

TEST_CASE("maximal lift output satisfies the chain conditions exhaustively") {
  struct Setup {
    const char* name;
    std::vector<int> gens;
  };
  for (const auto& setup : {Setup{"A2", {1}}, Setup{"B2", {1}}, Setup{"A3", {1}},
                            Setup{"A3", {0, 2}}, Setup{"B3", {0, 1}}}) {
    auto W = make(setup.name);
    GenMask J = mask_from_gens(setup.gens);
    // all strictly decreasing two-step coset chains below all bounds
    std::set<EltId> reps;
    for (EltId w = 0; w < W.size(); ++w) reps.insert(W.coset_of(w, J).min_rep);
    for (EltId w = 0; w < W.size(); ++w) {
      ParabolicCoset wbar = W.coset_of(w, J);
      for (EltId r1 : reps) {
        ParabolicCoset c1{r1, J};
        if (!W.coset_leq(c1, wbar)) continue;
        for (EltId r2 : reps) {
          ParabolicCoset c2{r2, J};
          if (!(W.coset_leq(c2, c1)) || r1 == r2) continue;
          auto chain = std::vector<ParabolicCoset>{c1, c2};
          auto lift = W.maximal_lift(w, chain);
          REQUIRE(lift.size() == 2);
          CHECK(W.coset_of(lift[0], J).min_rep == r1);
          CHECK(W.coset_of(lift[1], J).min_rep == r2);
          CHECK(W.bruhat_leq(lift[0], w));
          CHECK(W.bruhat_leq(lift[1], lift[0]));
          CHECK(lift[1] != lift[0]);
          // maximality against the full coset enumeration
          for (EltId z : W.coset_elements(c1))
            if (W.bruhat_leq(z, w)) CHECK(W.bruhat_leq(z, lift[0]));
          for (EltId z : W.coset_elements(c2))
            if (W.bruhat_leq(z, lift[0]) && z != lift[0]) CHECK(W.bruhat_leq(z, lift[1]));
        }
      }
    }
  }
}

TEST_CASE("maximal lift rejects malformed chains") {
  auto W = make("A2");
  GenMask J = mask_from_gens(std::vector<int>{1});
  EltId s1 = W.simple(0);
  ParabolicCoset c1 = W.coset_of(s1, J);
  // not strictly decreasing
  CHECK_THROWS_AS(W.maximal_lift(W.longest(), std::vector<ParabolicCoset>{c1, c1}),
                  std::invalid_argument);
  // head above the bound
  CHECK_THROWS_AS(W.maximal_lift(W.identity(), std::vector<ParabolicCoset>{c1}),
                  std::invalid_argument);
}

}  // TEST_SUITE
