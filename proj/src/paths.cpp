#include "pieri/paths.hpp"

#include <set>
#include <stdexcept>

namespace pieri {

bool operator<(const LSPath& a, const LSPath& b) {
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  if (a.dirs != b.dirs) return a.dirs < b.dirs;
  return lex_less(a.breaks, b.breaks);
}

void check_path_encoding(const LSPath& p) {
  if (p.dirs.empty() || p.breaks.size() != p.dirs.size() + 1)
    throw std::invalid_argument("LSPath: segment/breakpoint count mismatch");
  if (p.breaks.front() != Rational(0) || p.breaks.back() != Rational(1))
    throw std::invalid_argument("LSPath: breakpoints must run from 0 to 1");
  for (std::size_t j = 0; j + 1 < p.breaks.size(); ++j)
    if (!(p.breaks[j] < p.breaks[j + 1]))
      throw std::invalid_argument("LSPath: breakpoints must increase strictly");
  for (std::size_t j = 0; j + 1 < p.dirs.size(); ++j)
    if (p.dirs[j] == p.dirs[j + 1])
      throw std::invalid_argument("LSPath: adjacent directions must differ");
  endpoint(p);  // integrality
}

LSPath straight_path(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  if (!lambda.is_dominant())
    throw std::invalid_argument("straight_path requires a dominant weight");
  return LSPath{lambda, {lambda}, {Rational(0), Rational(1)}};
}

std::vector<Rational> evaluate(const LSPath& p, const Rational& t) {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("evaluate: t outside [0, 1]");
  const int n = p.lambda.rank();
  std::vector<Rational> pos(n, Rational(0));
  for (std::size_t j = 0; j < p.dirs.size(); ++j) {
    Rational lo = p.breaks[j], hi = p.breaks[j + 1];
    Rational len = (t < hi ? t : hi) - lo;
    if (len <= Rational(0)) break;
    for (int r = 0; r < n; ++r) pos[r] += len * Rational(p.dirs[j][r]);
    if (t <= hi) break;
  }
  return pos;
}

Weight endpoint(const LSPath& p) {
  auto v = evaluate(p, Rational(1));
  std::vector<int> c(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!is_integer(v[r])) throw std::invalid_argument("LSPath: endpoint is not integral");
    c[r] = static_cast<int>(v[r].numerator());
  }
  return Weight(std::move(c));
}

namespace {

// corner values of h(t) = <pi(t), alpha_i^vee>; slopes are the i-th
// direction coordinates, so corners are exact rationals
std::vector<Rational> corner_heights(const LSPath& p, int i) {
  std::vector<Rational> h(p.breaks.size());
  h[0] = Rational(0);
  for (std::size_t j = 0; j < p.dirs.size(); ++j)
    h[j + 1] = h[j] + (p.breaks[j + 1] - p.breaks[j]) * Rational(p.dirs[j][i]);
  return h;
}

// Rebuild the path that keeps pi on [0,q], applies s_i to the increments on
// [q,p], and leaves directions untouched after p (the translation part).
LSPath reflect_window(const RootSystem& rs, int i, const LSPath& p, const Rational& q,
                      const Rational& p_end) {
  std::vector<std::pair<Weight, Rational>> segs;  // (direction, length)
  auto push = [&](const Weight& d, const Rational& len) {
    if (len <= Rational(0)) return;
    if (!segs.empty() && segs.back().first == d)
      segs.back().second += len;
    else
      segs.emplace_back(d, len);
  };
  for (std::size_t j = 0; j < p.dirs.size(); ++j) {
    Rational lo = p.breaks[j], hi = p.breaks[j + 1];
    // split the segment at q and at p_end, transforming the middle part
    Rational a = lo, b = hi;
    if (a < q) {
      Rational cut = q < b ? q : b;
      push(p.dirs[j], cut - a);
      a = cut;
    }
    if (a < p_end && a < b) {
      Rational cut = p_end < b ? p_end : b;
      push(rs.reflect(p.dirs[j], i), cut - a);
      a = cut;
    }
    if (a < b) push(p.dirs[j], b - a);
  }
  LSPath out;
  out.lambda = p.lambda;
  out.breaks.push_back(Rational(0));
  Rational acc(0);
  for (auto& [d, len] : segs) {
    out.dirs.push_back(d);
    acc += len;
    out.breaks.push_back(acc);
  }
  if (acc != Rational(1)) throw std::logic_error("root operator: segment lengths do not sum to 1");
  try {
    check_path_encoding(out);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("root operator produced an invalid path: ") + e.what());
  }
  return out;
}

Rational min_corner(const std::vector<Rational>& h) {
  Rational m = h[0];
  for (const auto& v : h)
    if (v < m) m = v;
  return m;
}

}  // namespace

std::optional<LSPath> root_op_f(const RootSystem& rs, int i, const LSPath& pi) {
  rs.check_weight(pi.lambda);
  const auto h = corner_heights(pi, i);
  const Rational m = min_corner(h);
  if (!is_integer(m))
    throw std::invalid_argument("root_op_f: path is not integral for this root");
  if (h.back() - m < Rational(1)) return std::nullopt;

  std::size_t jq = 0;
  for (std::size_t j = 0; j < h.size(); ++j)
    if (h[j] == m) jq = j;  // last attainment of the minimum; always a corner
  const Rational q = pi.breaks[jq];

  // first time >= q with h = m + 1: scan right, cross inside a rising segment
  const Rational target = m + 1;
  Rational p_end = pi.breaks.back();
  bool found = false;
  for (std::size_t j = jq + 1; j < h.size(); ++j) {
    if (h[j] >= target) {
      Rational slope(pi.dirs[j - 1][i]);
      p_end = pi.breaks[j - 1] + (target - h[j - 1]) / slope;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("root_op_f: level m+1 not reached after minimum");
  return reflect_window(rs, i, pi, q, p_end);
}

std::optional<LSPath> root_op_e(const RootSystem& rs, int i, const LSPath& pi) {
  rs.check_weight(pi.lambda);
  const auto h = corner_heights(pi, i);
  const Rational m = min_corner(h);
  if (!is_integer(m))
    throw std::invalid_argument("root_op_e: path is not integral for this root");
  if (m > Rational(-1)) return std::nullopt;

  std::size_t jp = 0;
  while (h[jp] != m) ++jp;  // first attainment of the minimum; a corner
  const Rational p_end = pi.breaks[jp];

  // last time <= p with h = m + 1: scan left, cross inside a falling segment
  const Rational target = m + 1;
  Rational q = pi.breaks.front();
  bool found = false;
  for (std::size_t j = jp; j >= 1; --j) {
    if (h[j - 1] >= target) {
      Rational slope(pi.dirs[j - 1][i]);
      q = pi.breaks[j - 1] + (target - h[j - 1]) / slope;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("root_op_e: level m+1 not reached before minimum");
  return reflect_window(rs, i, pi, q, p_end);
}

PathModel::PathModel(const WeylGroup& W, Weight lambda) : W_(W), lambda_(std::move(lambda)) {
  W_.root_system().check_weight(lambda_);
  if (!lambda_.is_dominant()) throw std::invalid_argument("PathModel requires a dominant weight");
  auto J = W_.root_system().stabilizer_generators(lambda_);
  mask_ = mask_from_gens(J);

  // orbit traversal with a representative per weight; the coset of the
  // representative is independent of the path taken
  std::vector<std::pair<Weight, EltId>> frontier{{lambda_, W_.identity()}};
  orbit_coset_.emplace(lambda_, W_.coset_of(W_.identity(), mask_));
  while (!frontier.empty()) {
    std::vector<std::pair<Weight, EltId>> next;
    for (const auto& [mu, u] : frontier)
      for (int i = 0; i < W_.rank(); ++i) {
        Weight nu = W_.root_system().reflect(mu, i);
        if (orbit_coset_.contains(nu)) continue;
        EltId v = W_.mult(W_.simple(i), u);
        orbit_coset_.emplace(nu, W_.coset_of(v, mask_));
        next.emplace_back(nu, v);
      }
    frontier = std::move(next);
  }
}

ParabolicCoset PathModel::direction_coset(const Weight& orbit_weight) const {
  auto it = orbit_coset_.find(orbit_weight);
  if (it == orbit_coset_.end())
    throw std::invalid_argument("weight " + orbit_weight.str() + " is not in the orbit of " +
                                lambda_.str());
  return it->second;
}

ParabolicCoset PathModel::initial_direction(const LSPath& p) const {
  return direction_coset(p.dirs.front());
}

std::vector<ParabolicCoset> PathModel::coset_chain(const LSPath& p) const {
  std::vector<ParabolicCoset> chain;
  chain.reserve(p.dirs.size());
  for (const auto& d : p.dirs) chain.push_back(direction_coset(d));
  return chain;
}

PathSet PathModel::generate(std::size_t cap) const {
  PathSet out;
  out.lambda = lambda_;
  std::set<LSPath> seen;
  out.paths.push_back(straight());
  seen.insert(out.paths.front());
  for (std::size_t q = 0; q < out.paths.size(); ++q) {
    // out.paths grows while we scan it: breadth-first by discovery order
    for (int i = 0; i < W_.rank(); ++i) {
      auto child = root_op_f(W_.root_system(), i, out.paths[q]);
      if (!child) continue;
      if (seen.insert(*child).second) {
        out.paths.push_back(std::move(*child));
        if (out.paths.size() > cap)
          throw std::runtime_error("generate_paths: size cap exceeded");
      }
    }
  }
  return out;
}

PathSet PathModel::restrict_le(const PathSet& ps, EltId w) const {
  ParabolicCoset wbar = W_.coset_of(w, mask_);
  PathSet out;
  out.lambda = ps.lambda;
  for (const auto& p : ps.paths)
    if (W_.coset_leq(initial_direction(p), wbar)) out.paths.push_back(p);
  return out;
}

EltId PathModel::final_direction(const LSPath& p, EltId w) const {
  auto chain = coset_chain(p);
  ParabolicCoset wbar = W_.coset_of(w, mask_);
  if (!W_.coset_leq(chain.front(), wbar))
    throw std::invalid_argument("final_direction: path is not in the <= w restriction");
  auto lift = W_.maximal_lift(w, chain);
  return lift.back();
}

void PathModel::validate(const LSPath& p) const {
  try {
    check_path_encoding(p);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("LSPath invariant violated: ") + e.what());
  }
  if (p.lambda != lambda_) throw std::logic_error("LSPath invariant violated: wrong shape");
  auto chain = coset_chain(p);  // throws if a direction leaves the orbit
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (!(W_.coset_leq(chain[j + 1], chain[j])) || chain[j + 1] == chain[j])
      throw std::logic_error("LSPath invariant violated: coset chain is not strictly decreasing");
  }
}

}  // namespace pieri
