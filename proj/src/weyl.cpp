#include "pieri/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace pieri {

GenMask mask_from_gens(std::span<const int> gens) {
  GenMask m = 0;
  for (int g : gens) {
    if (g < 0 || g >= 32) throw std::invalid_argument("generator index out of range");
    m |= (GenMask{1} << g);
  }
  return m;
}

std::vector<int> gens_from_mask(GenMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

WeylGroup::Mat WeylGroup::simple_matrix(int i) const {
  int n = rs_.rank();
  Mat m(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) m[static_cast<std::size_t>(r) * n + r] = 1;
  // column i becomes e_i - alpha_i
  for (int r = 0; r < n; ++r) m[static_cast<std::size_t>(r) * n + i] -= rs_.cartan()[r][i];
  return m;
}

WeylGroup::Mat WeylGroup::mat_mult(const Mat& a, const Mat& b, int n) {
  Mat c(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      int ark = a[static_cast<std::size_t>(r) * n + k];
      if (ark == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(r) * n + j] += ark * b[static_cast<std::size_t>(k) * n + j];
    }
  return c;
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank();
  std::vector<Mat> gen(n);
  for (int i = 0; i < n; ++i) gen[i] = simple_matrix(i);

  // breadth-first closure; BFS depth equals Coxeter length
  Mat id(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) id[static_cast<std::size_t>(r) * n + r] = 1;

  std::map<Mat, int> depth;
  depth[id] = 0;
  std::vector<Mat> frontier{id};
  int level = 0;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (int i = 0; i < n; ++i) {
        Mat v = mat_mult(m, gen[i], n);
        if (depth.emplace(v, level + 1).second) next.push_back(v);
      }
    frontier = std::move(next);
    ++level;
  }

  // canonical word = lexicographically least reduced word, computed by
  // dynamic programming over lengths: canon(v) = min_i canon(v s_i) + [i]
  // over right descents i of v
  struct Node {
    Mat mat;
    int len;
    std::vector<int> word;
  };
  std::vector<Node> nodes;
  nodes.reserve(depth.size());
  for (auto& [m, d] : depth) nodes.push_back({m, d, {}});
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const Node& a, const Node& b) { return a.len < b.len; });

  std::map<Mat, std::size_t> pos;
  for (std::size_t k = 0; k < nodes.size(); ++k) pos[nodes[k].mat] = k;

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Node& v = nodes[k];
    if (v.len == 0) continue;
    bool have = false;
    std::vector<int> best;
    for (int i = 0; i < n; ++i) {
      Mat u = mat_mult(v.mat, gen[i], n);
      std::size_t ku = pos.at(u);
      if (nodes[ku].len != v.len - 1) continue;  // not a right descent
      std::vector<int> cand = nodes[ku].word;
      cand.push_back(i);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
    if (!have) throw std::logic_error("element without right descent");
    v.word = std::move(best);
  }

  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.word < b.word;
  });

  const std::size_t N = nodes.size();
  action_.resize(N);
  length_.resize(N);
  word_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    action_[k] = nodes[k].mat;
    length_[k] = nodes[k].len;
    word_[k] = nodes[k].word;
    index_[nodes[k].mat] = static_cast<EltId>(k);
  }
  longest_ = static_cast<EltId>(N - 1);
  if (length_[longest_] != static_cast<int>(rs_.positive_roots().size()))
    throw std::logic_error("longest element length != number of positive roots");

  right_simple_.assign(N, std::vector<EltId>(n));
  inverse_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    for (int i = 0; i < n; ++i)
      right_simple_[k][i] = index_.at(mat_mult(action_[k], gen[i], n));
    // the action matrices are orthogonal-like integer matrices; invert by search
    // via the word: w^{-1} = reversed word
    std::vector<int> rev(word_[k].rbegin(), word_[k].rend());
    EltId inv = 0;
    for (int i : rev) inv = right_simple_[inv][i];
    inverse_[k] = inv;
  }

  // reflections = conjugates of simple reflections
  {
    boost::dynamic_bitset<> is_refl(N);
    for (std::size_t u = 0; u < N; ++u)
      for (int i = 0; i < n; ++i) {
        EltId r = mult(mult(static_cast<EltId>(u), simple(i)), inverse_[u]);
        is_refl.set(r);
      }
    for (std::size_t k = 0; k < N; ++k)
      if (is_refl.test(k)) reflections_.push_back(static_cast<EltId>(k));
    if (reflections_.size() != rs_.positive_roots().size())
      throw std::logic_error("reflection count != positive root count");
  }

  // Bruhat order: covers u <| u t (t reflection, length +1); down-sets by
  // closure in length order
  bruhat_.assign(N, boost::dynamic_bitset<>(N));
  bruhat_[0].set(0);
  for (std::size_t v = 1; v < N; ++v) {
    auto& down = bruhat_[v];
    down.set(v);
    for (EltId t : reflections_) {
      EltId u = mult(static_cast<EltId>(v), t);
      if (length_[u] == length_[v] - 1) down |= bruhat_[u];
    }
  }

  // parabolic subgroups W_J for every J, eagerly (2^rank <= 16 masks)
  parabolic_.resize(std::size_t{1} << n);
  for (GenMask mask = 0; mask < parabolic_.size(); ++mask) {
    boost::dynamic_bitset<> seen(N);
    seen.set(0);
    std::vector<EltId> members{0};
    for (std::size_t q = 0; q < members.size(); ++q)
      for (int i = 0; i < n; ++i) {
        if (!(mask & (GenMask{1} << i))) continue;
        EltId x = right_simple_[members[q]][i];
        if (!seen.test(x)) {
          seen.set(x);
          members.push_back(x);
        }
      }
    std::sort(members.begin(), members.end());
    parabolic_[mask] = std::move(members);
  }
}

void WeylGroup::check_elt(EltId a) const {
  if (a >= size()) throw std::invalid_argument("Weyl element id out of range");
}

EltId WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("simple index out of range");
  return index_.at(simple_matrix(i));
}

EltId WeylGroup::id_of(const Mat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::logic_error("matrix is not a Weyl group element");
  return it->second;
}

EltId WeylGroup::mult(EltId a, EltId b) const {
  check_elt(a);
  check_elt(b);
  EltId out = a;
  for (int i : word_[b]) out = right_simple_[out][i];
  return out;
}

EltId WeylGroup::from_word(std::span<const int> w) const {
  EltId out = 0;
  for (int i : w) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("word letter out of range");
    out = right_simple_[out][i];
  }
  return out;
}

bool WeylGroup::is_reduced(std::span<const int> w) const {
  return length(from_word(w)) == static_cast<int>(w.size());
}

Weight WeylGroup::act(EltId a, const Weight& lambda) const {
  check_elt(a);
  rs_.check_weight(lambda);
  const int n = rank();
  std::vector<int> out(n, 0);
  const Mat& m = action_[a];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += m[static_cast<std::size_t>(r) * n + c] * lambda[c];
  return Weight(std::move(out));
}

std::vector<std::vector<int>> WeylGroup::action_matrix(EltId a) const {
  check_elt(a);
  const int n = rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = action_[a][static_cast<std::size_t>(r) * n + c];
  return m;
}

const std::vector<EltId>& WeylGroup::parabolic_elements(GenMask mask) const {
  if (mask >= parabolic_.size()) throw std::invalid_argument("generator mask out of range");
  return parabolic_[mask];
}

ParabolicCoset WeylGroup::coset_of(EltId w, GenMask mask) const {
  check_elt(w);
  if (mask >= parabolic_.size()) throw std::invalid_argument("generator mask out of range");
  EltId m = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i) {
      if (!(mask & (GenMask{1} << i))) continue;
      EltId x = right_simple_[m][i];
      if (length_[x] < length_[m]) {
        m = x;
        moved = true;
      }
    }
  }
  return ParabolicCoset{m, mask};
}

bool WeylGroup::coset_leq(const ParabolicCoset& a, const ParabolicCoset& b) const {
  if (a.gens != b.gens)
    throw std::invalid_argument("coset_leq: cosets over different parabolic subgroups");
  return bruhat_leq(a.min_rep, b.min_rep);
}

std::vector<EltId> WeylGroup::coset_elements(const ParabolicCoset& c) const {
  std::vector<EltId> out;
  for (EltId z : parabolic_elements(c.gens)) out.push_back(mult(c.min_rep, z));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EltId> WeylGroup::maximal_lift(EltId w,
                                           std::span<const ParabolicCoset> chain) const {
  check_elt(w);
  if (chain.empty()) return {};
  GenMask mask = chain[0].gens;
  for (const auto& c : chain)
    if (c.gens != mask) throw std::invalid_argument("maximal_lift: mixed parabolic masks");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!(coset_leq(chain[k + 1], chain[k])) || chain[k + 1] == chain[k])
      throw std::invalid_argument("maximal_lift: chain is not strictly decreasing");
  }
  if (!coset_leq(chain[0], coset_of(w, mask)))
    throw std::invalid_argument("maximal_lift: chain head exceeds the bound");

  std::vector<EltId> lift;
  EltId bound = w;
  bool strict = false;  // first step allows t_1 = w
  for (const auto& c : chain) {
    std::vector<EltId> candidates;
    for (EltId z : coset_elements(c))
      if (bruhat_leq(z, bound) && (!strict || z != bound)) candidates.push_back(z);
    if (candidates.empty()) throw std::logic_error("maximal_lift: empty fiber below bound");
    // the set below a bound inside one coset must have a unique maximum
    std::vector<EltId> maxima;
    for (EltId z : candidates) {
      bool dominated = false;
      for (EltId y : candidates)
        if (y != z && bruhat_leq(z, y)) {
          dominated = true;
          break;
        }
      if (!dominated) maxima.push_back(z);
    }
    if (maxima.size() != 1)
      throw std::logic_error("maximal_lift: maximum below bound is not unique");
    bound = maxima.front();
    strict = true;
    lift.push_back(bound);
  }
  return lift;
}

}  // namespace pieri
