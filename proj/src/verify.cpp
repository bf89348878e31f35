#include "pieri/verify.hpp"

#include <atomic>
#include <functional>
#include <set>
#include <thread>

namespace pieri {

std::string word_str(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

std::vector<Weight> dominant_box(const RootSystem& rs, int box) {
  std::vector<Weight> out;
  std::vector<int> c(rs.rank(), 0);
  for (;;) {
    out.push_back(Weight(c));
    int j = rs.rank() - 1;
    while (j >= 0 && c[j] == box) c[j--] = 0;
    if (j < 0) break;
    ++c[j];
  }
  return out;
}

std::vector<Weight> symmetric_box(const RootSystem& rs, int box) {
  std::vector<Weight> out;
  std::vector<int> c(rs.rank(), -box);
  for (;;) {
    out.push_back(Weight(c));
    int j = rs.rank() - 1;
    while (j >= 0 && c[j] == box) c[j--] = -box;
    if (j < 0) break;
    ++c[j];
  }
  return out;
}

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs < 2 || n < 2) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int workers = jobs < static_cast<int>(n) ? jobs : static_cast<int>(n);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= n) return;
        fn(k);
      }
    });
  for (auto& th : pool) th.join();
}

struct CellResult {
  std::size_t checked = 0;
  std::optional<Counterexample> failure;
};

// runs cells in parallel, then folds results in canonical (index) order
VerificationReport run_cells(std::string identity, const WeylGroup& W, std::string params,
                             std::size_t n, int jobs,
                             const std::function<CellResult(std::size_t)>& cell) {
  std::vector<CellResult> results(n);
  parallel_for(n, jobs, [&](std::size_t k) {
    try {
      results[k] = cell(k);
    } catch (const std::exception& e) {
      CellResult r;
      Counterexample ce;
      ce.detail = std::string("exception: ") + e.what();
      r.failure = std::move(ce);
      results[k] = r;
    }
  });
  VerificationReport rep;
  rep.identity = std::move(identity);
  rep.root_system = W.root_system().name();
  rep.params = std::move(params);
  for (const auto& r : results) {
    rep.checked += r.checked;
    if (!rep.pass) continue;
    if (r.failure) {
      rep.pass = false;
      rep.counterexample = r.failure;
    }
  }
  return rep;
}

std::string box_params(int lambda_box, int mu_box) {
  return "lambda_box=" + std::to_string(lambda_box) + " mu_box=" + std::to_string(mu_box);
}

}  // namespace

VerificationReport verify_theorem(const WeylGroup& W, int lambda_box, int mu_box, int jobs) {
  auto lambdas = dominant_box(W.root_system(), lambda_box);
  auto mus = symmetric_box(W.root_system(), mu_box);
  std::size_t n_cells = lambdas.size() * W.size();

  auto cell = [&](std::size_t k) {
    const Weight& lambda = lambdas[k / W.size()];
    EltId w = static_cast<EltId>(k % W.size());
    PathModel model(W, lambda);
    PathSet restricted = model.restrict_le(model.generate(), w);
    // per path: the word of v(eta,w)^{-1} and the endpoint, reused over mu
    std::vector<std::pair<std::vector<int>, Weight>> contributions;
    contributions.reserve(restricted.paths.size());
    for (const auto& eta : restricted.paths) {
      EltId v = model.final_direction(eta, w);
      contributions.emplace_back(W.word(W.inverse(v)), endpoint(eta));
    }
    const auto w_inv_word = W.word(W.inverse(w));
    CellResult res;
    for (const auto& mu : mus) {
      GroupRingElt f = GroupRingElt::monomial(mu, Lattice::y);
      GroupRingElt lhs = y_mul(lambda, demazure_word(W, w_inv_word, f));
      GroupRingElt rhs(Lattice::y);
      for (const auto& [v_word, end] : contributions)
        rhs += demazure_word(W, v_word, GroupRingElt::monomial(end + mu, Lattice::y));
      ++res.checked;
      if (lhs != rhs) {
        res.failure = Counterexample{lambda.str(), word_str(W.word(w)), "", mu.str(),
                                     lhs.str(), rhs.str(), "theorem identity"};
        break;
      }
    }
    return res;
  };
  return run_cells("theorem", W, box_params(lambda_box, mu_box), n_cells, jobs, cell);
}

VerificationReport verify_commutation(const WeylGroup& W, int lambda_box, int mu_box,
                                      int jobs) {
  const auto& rs = W.root_system();
  auto lambdas = symmetric_box(rs, lambda_box);
  auto mus = symmetric_box(rs, mu_box);
  std::size_t n_cells = lambdas.size() * static_cast<std::size_t>(rs.rank());

  auto cell = [&](std::size_t k) {
    const Weight& lambda = lambdas[k / rs.rank()];
    int i = static_cast<int>(k % rs.rank());
    const Weight si_lambda = rs.reflect(lambda, i);
    const GroupRingElt divided = chevalley_divided_term(rs, lambda, i);
    CellResult res;
    for (const auto& mu : mus) {
      GroupRingElt f = GroupRingElt::monomial(mu, Lattice::y);
      GroupRingElt lhs = y_mul(lambda, demazure_apply(rs, i, f));
      GroupRingElt rhs = demazure_apply(rs, i, y_mul(si_lambda, f)) + divided * f;
      ++res.checked;
      if (lhs != rhs) {
        res.failure = Counterexample{lambda.str(), "", std::to_string(i + 1), mu.str(),
                                     lhs.str(), rhs.str(), "commutation relation"};
        break;
      }
    }
    return res;
  };
  return run_cells("commutation", W, box_params(lambda_box, mu_box), n_cells, jobs, cell);
}

VerificationReport verify_operator_algebra(const WeylGroup& W, int lambda_box, int mu_box) {
  const auto& rs = W.root_system();
  VerificationReport rep;
  rep.identity = "operator_algebra";
  rep.root_system = rs.name();
  rep.params = box_params(lambda_box, mu_box);

  auto fail = [&](Counterexample ce) {
    rep.pass = false;
    rep.counterexample = std::move(ce);
  };

  // idempotence
  for (const auto& mu : symmetric_box(rs, mu_box)) {
    for (int i = 0; i < rs.rank(); ++i) {
      GroupRingElt ti = demazure_apply(rs, i, GroupRingElt::monomial(mu, Lattice::y));
      GroupRingElt titi = demazure_apply(rs, i, ti);
      ++rep.checked;
      if (ti != titi) {
        fail({"", "", std::to_string(i + 1), mu.str(), titi.str(), ti.str(),
              "idempotence T_i^2 = T_i"});
        return rep;
      }
    }
  }

  // defining relation against the rational-function form
  for (const auto& lambda : symmetric_box(rs, lambda_box)) {
    for (int i = 0; i < rs.rank(); ++i) {
      const Weight alpha = rs.simple_root(i);
      GroupRingElt denom(Lattice::y);
      denom.add_term(alpha, 1);
      denom.add_term(rs.zero(), -1);
      GroupRingElt lhs = denom * demazure_apply(rs, i, GroupRingElt::monomial(lambda, Lattice::y));
      GroupRingElt rhs = GroupRingElt::monomial(lambda + alpha, Lattice::y);
      rhs.add_term(rs.reflect(lambda, i), -1);
      ++rep.checked;
      if (lhs != rhs) {
        fail({lambda.str(), "", std::to_string(i + 1), "", lhs.str(), rhs.str(),
              "defining relation (e^alpha - 1) T_i(e^lambda)"});
        return rep;
      }
    }
  }

  // braid relations: alternating words of the Coxeter order
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = i + 1; j < rs.rank(); ++j) {
      int prod = rs.cartan()[i][j] * rs.cartan()[j][i];
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      auto alternating = [&](int first, int second) {
        std::vector<int> word;
        for (int k = 0; k < m; ++k) word.push_back(k % 2 == 0 ? first : second);
        return word;
      };
      auto apply_letters = [&](const std::vector<int>& word, GroupRingElt f) {
        for (int letter : word) f = demazure_apply(rs, letter, f);
        return f;
      };
      const auto wij = alternating(i, j), wji = alternating(j, i);
      for (const auto& mu : symmetric_box(rs, mu_box)) {
        GroupRingElt f = GroupRingElt::monomial(mu, Lattice::y);
        GroupRingElt a = apply_letters(wij, f);
        GroupRingElt b = apply_letters(wji, f);
        ++rep.checked;
        if (a != b) {
          fail({"", "", std::to_string(i + 1) + "," + std::to_string(j + 1), mu.str(), a.str(),
                b.str(), "braid relation of order " + std::to_string(m)});
          return rep;
        }
      }
    }
  }
  return rep;
}

VerificationReport verify_dimensions(const WeylGroup& W, int lambda_box) {
  VerificationReport rep;
  rep.identity = "dimensions";
  rep.root_system = W.root_system().name();
  rep.params = "lambda_box=" + std::to_string(lambda_box);

  for (const auto& lambda : dominant_box(W.root_system(), lambda_box)) {
    PathModel model(W, lambda);
    PathSet ps = model.generate();
    for (const auto& p : ps.paths) model.validate(p);

    Int expected = W.root_system().weyl_dimension(lambda);
    ++rep.checked;
    if (Int(ps.paths.size()) != expected) {
      rep.pass = false;
      rep.counterexample =
          Counterexample{lambda.str(), "", "", "", std::to_string(ps.paths.size()),
                         expected.str(), "|T^lambda| vs Weyl dimension formula"};
      return rep;
    }

    GroupRingElt character(Lattice::y);
    for (const auto& p : ps.paths) character.add_term(endpoint(p), 1);
    GroupRingElt demazure_full = demazure_word(
        W, W.word(W.longest()), GroupRingElt::monomial(lambda, Lattice::y));
    ++rep.checked;
    if (character != demazure_full) {
      rep.pass = false;
      rep.counterexample = Counterexample{lambda.str(), word_str(W.word(W.longest())), "", "",
                                          character.str(), demazure_full.str(),
                                          "character sum vs T_{w0}(e^lambda)"};
      return rep;
    }
  }
  return rep;
}

VerificationReport verify_crystal_roundtrip(const WeylGroup& W, int lambda_box) {
  const auto& rs = W.root_system();
  VerificationReport rep;
  rep.identity = "crystal_roundtrip";
  rep.root_system = rs.name();
  rep.params = "lambda_box=" + std::to_string(lambda_box);

  for (const auto& lambda : dominant_box(rs, lambda_box)) {
    PathModel model(W, lambda);
    PathSet ps = model.generate();
    std::set<LSPath> members(ps.paths.begin(), ps.paths.end());
    for (const auto& p : ps.paths) {
      for (int i = 0; i < rs.rank(); ++i) {
        auto down = root_op_f(rs, i, p);
        if (down) {
          ++rep.checked;
          if (!members.contains(*down)) {
            rep.pass = false;
            rep.counterexample = Counterexample{lambda.str(), "", std::to_string(i + 1), "", "",
                                                "", "T^lambda not closed under f_i"};
            return rep;
          }
          auto back = root_op_e(rs, i, *down);
          if (!back || !(*back == p)) {
            rep.pass = false;
            rep.counterexample = Counterexample{lambda.str(), "", std::to_string(i + 1), "", "",
                                                "", "e_i(f_i(pi)) != pi"};
            return rep;
          }
        }
        auto up = root_op_e(rs, i, p);
        if (up) {
          ++rep.checked;
          auto back = root_op_f(rs, i, *up);
          if (!back || !(*back == p)) {
            rep.pass = false;
            rep.counterexample = Counterexample{lambda.str(), "", std::to_string(i + 1), "", "",
                                                "", "f_i(e_i(pi)) != pi"};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

VerificationReport verify_corollary(const WeylGroup& W, int lambda_box) {
  VerificationReport rep;
  rep.identity = "corollary";
  rep.root_system = W.root_system().name();
  rep.params = "lambda_box=" + std::to_string(lambda_box);

  for (const auto& lambda : dominant_box(W.root_system(), lambda_box)) {
    // w = 1 reduces to multiplication by x^lambda
    Expansion at_identity = expand(W, lambda, W.identity());
    ++rep.checked;
    bool ok = at_identity.terms.size() == 1 &&
              at_identity.terms.begin()->first == W.identity() &&
              at_identity.terms.begin()->second ==
                  GroupRingElt::monomial(lambda, Lattice::x);
    if (!ok) {
      rep.pass = false;
      rep.counterexample = Counterexample{lambda.str(), "e", "", "", "", "",
                                          "expand(lambda, 1) != {1 -> x^lambda}"};
      return rep;
    }

    PathModel model(W, lambda);
    PathSet all = model.generate();
    for (EltId w = 0; w < W.size(); ++w) {
      Expansion ex = expand(W, lambda, w);
      Int total = 0;
      bool positive = true;
      for (const auto& [v, coeff] : ex.terms) {
        for (const auto& [mu, c] : coeff.terms())
          if (c < 1) positive = false;
        total += coeff.mass();
      }
      std::size_t restricted_count = model.restrict_le(all, w).paths.size();
      ++rep.checked;
      if (!positive || total != Int(restricted_count)) {
        rep.pass = false;
        rep.counterexample = Counterexample{
            lambda.str(), word_str(W.word(w)), "", "", total.str(),
            std::to_string(restricted_count),
            positive ? "expansion mass vs |T^lambda_{<=w}|" : "non-positive coefficient"};
        return rep;
      }
    }
  }
  return rep;
}

VerificationReport verify_string_lemma(const WeylGroup& W, const Weight& lambda, EltId w,
                                       int i, int mu_box) {
  const auto& rs = W.root_system();
  VerificationReport rep;
  rep.identity = "string_lemma";
  rep.root_system = rs.name();
  rep.params = "lambda=" + lambda.str() + " w=" + word_str(W.word(w)) +
               " i=" + std::to_string(i + 1) + " mu_box=" + std::to_string(mu_box);

  // The lemma is the descent step of the theorem's induction: it requires
  // s_i w < w, and it speaks about strings lying entirely inside the
  // restricted set (members outside carry no final direction).
  if (W.length(W.mult(W.simple(i), w)) > W.length(w)) {
    ++rep.skipped;
    return rep;
  }

  PathModel model(W, lambda);
  PathSet all = model.generate();
  auto strings = string_decompose(rs, all, i);
  auto mus = symmetric_box(rs, mu_box);
  ParabolicCoset wbar = W.coset_of(w, model.stabilizer_mask());

  for (const auto& chain : strings) {
    bool contained = true;
    for (const auto& eta : chain)
      if (!W.coset_leq(model.initial_direction(eta), wbar)) contained = false;
    if (!contained) {
      ++rep.skipped;
      continue;
    }
    std::vector<std::pair<std::vector<int>, Weight>> members;
    for (const auto& eta : chain)
      members.emplace_back(W.word(W.inverse(model.final_direction(eta, w))), endpoint(eta));
    const auto& head_word = members.front().first;
    const Weight& head_end = members.front().second;

    for (const auto& mu : mus) {
      GroupRingElt f = GroupRingElt::monomial(mu, Lattice::y);
      GroupRingElt lhs(Lattice::y);
      for (const auto& [v_word, end] : members)
        lhs += demazure_word(W, v_word, y_mul(end, f));
      GroupRingElt rhs =
          demazure_word(W, head_word, y_mul(head_end, demazure_apply(rs, i, f)));
      ++rep.checked;
      if (lhs != rhs) {
        rep.pass = false;
        rep.counterexample =
            Counterexample{lambda.str(), word_str(W.word(w)), std::to_string(i + 1), mu.str(),
                           lhs.str(), rhs.str(), "string lemma"};
        return rep;
      }
    }
  }
  return rep;
}

VerificationReport verify_string_lemma_grid(const WeylGroup& W, int lambda_box, int mu_box) {
  VerificationReport rep;
  rep.identity = "string_lemma";
  rep.root_system = W.root_system().name();
  rep.params = box_params(lambda_box, mu_box);
  for (const auto& lambda : dominant_box(W.root_system(), lambda_box)) {
    for (EltId w = 0; w < W.size(); ++w) {
      for (int i = 0; i < W.rank(); ++i) {
        auto sub = verify_string_lemma(W, lambda, w, i, mu_box);
        rep.checked += sub.checked;
        rep.skipped += sub.skipped;
        if (!sub.pass) {
          rep.pass = false;
          rep.counterexample = sub.counterexample;
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace pieri
