#include "pieri/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pieri {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("unsupported root system " + std::string(1, type) +
                                 std::to_string(rank) + ": " + why);
  };
  if (rank < 1 || rank > 4) throw bad("rank must be between 1 and 4");

  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {  // simply-laced path on nodes 0..upto
    for (int i = 0; i + 1 <= upto; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };

  switch (type) {
    case 'A':
      chain(rank - 1);
      return a;
    case 'B':
      if (rank < 2) throw bad("type B needs rank >= 2 (B1 is A1)");
      chain(rank - 1);
      a[rank - 1][rank - 2] = -2;  // <alpha_{l-1}, alpha_l^vee>
      return a;
    case 'C':
      if (rank < 2) throw bad("type C needs rank >= 2 (C1 is A1)");
      chain(rank - 1);
      a[rank - 2][rank - 1] = -2;  // <alpha_l, alpha_{l-1}^vee>
      return a;
    case 'D':
      if (rank != 4) throw bad("type D is supported at rank 4 only (D3 = A3)");
      // branch node alpha_2 (index 1), per Bourbaki D4
      a[0][1] = a[1][0] = -1;
      a[1][2] = a[2][1] = -1;
      a[1][3] = a[3][1] = -1;
      return a;
    case 'E':
      throw bad("type E needs rank between 6 and 8");
    case 'F':
      if (rank != 4) throw bad("type F exists at rank 4 only");
      chain(3);
      a[2][1] = -2;  // <alpha_2, alpha_3^vee>; alpha_1, alpha_2 long
      return a;
    case 'G':
      if (rank != 2) throw bad("type G exists at rank 2 only");
      a[0][1] = -3;  // <alpha_2, alpha_1^vee>; alpha_1 short
      a[1][0] = -1;
      return a;
    default:
      throw bad("type letter must be one of A,B,C,D,E,F,G");
  }
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
  RootSystem rs;
  rs.type_ = type_letter;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type_letter, rank);
  rs.enumerate_positive_roots();
  return rs;
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight has wrong rank");
}

int RootSystem::pairing(const Weight& lambda, int i) const {
  check_weight(lambda);
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple index out of range");
  return lambda[i];
}

Weight RootSystem::reflect(const Weight& lambda, int i) const {
  int k = pairing(lambda, i);
  Weight out = lambda;
  for (int r = 0; r < rank_; ++r) out[r] -= k * cartan_[r][i];
  return out;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple index out of range");
  std::vector<int> c(rank_);
  for (int r = 0; r < rank_; ++r) c[r] = cartan_[r][i];
  return Weight(std::move(c));
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple index out of range");
  std::vector<int> c(rank_, 0);
  c[i] = 1;
  return Weight(std::move(c));
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank_, 1)); }

Weight RootSystem::zero() const { return Weight(std::vector<int>(rank_, 0)); }

void RootSystem::enumerate_positive_roots() {
  // Close {simple roots} under all simple reflections, tracking root and
  // coroot coordinates alongside; then keep the positive half.
  struct Entry {
    std::vector<int> root;    // alpha in the simple-root basis
    std::vector<int> coroot;  // alpha^vee in the simple-coroot basis
  };
  auto reflect_entry = [&](const Entry& e, int i) {
    Entry out = e;
    int kr = 0, kc = 0;
    for (int j = 0; j < rank_; ++j) {
      kr += cartan_[i][j] * e.root[j];    // <alpha, alpha_i^vee>
      kc += cartan_[j][i] * e.coroot[j];  // <alpha_i, alpha^vee>
    }
    out.root[i] -= kr;
    out.coroot[i] -= kc;
    return out;
  };

  std::set<std::vector<int>> seen;
  std::vector<Entry> frontier, all;
  for (int i = 0; i < rank_; ++i) {
    Entry e;
    e.root.assign(rank_, 0);
    e.coroot.assign(rank_, 0);
    e.root[i] = e.coroot[i] = 1;
    seen.insert(e.root);
    frontier.push_back(e);
    all.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Entry> next;
    for (const auto& e : frontier)
      for (int i = 0; i < rank_; ++i) {
        Entry r = reflect_entry(e, i);
        if (seen.insert(r.root).second) {
          next.push_back(r);
          all.push_back(r);
        }
      }
    frontier = std::move(next);
  }

  for (const auto& e : all) {
    bool pos = true, neg = true;
    for (int c : e.root) {
      if (c < 0) pos = false;
      if (c > 0) neg = false;
    }
    if (!pos && !neg) throw std::logic_error("root with mixed signs");
    if (!pos) continue;
    PositiveRoot pr;
    pr.in_simple_roots = e.root;
    pr.coroot_in_simple = e.coroot;
    std::vector<int> fw(rank_, 0);
    for (int r = 0; r < rank_; ++r)
      for (int j = 0; j < rank_; ++j) fw[r] += cartan_[r][j] * e.root[j];
    pr.fw = Weight(std::move(fw));
    positive_roots_.push_back(std::move(pr));
  }

  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              int ha = std::accumulate(a.in_simple_roots.begin(), a.in_simple_roots.end(), 0);
              int hb = std::accumulate(b.in_simple_roots.begin(), b.in_simple_roots.end(), 0);
              if (ha != hb) return ha < hb;  // by height, then lex
              return a.in_simple_roots < b.in_simple_roots;
            });
}

std::vector<int> RootSystem::stabilizer_generators(const Weight& lambda) const {
  check_weight(lambda);
  if (!lambda.is_dominant())
    throw std::invalid_argument("stabilizer_generators requires a dominant weight");
  std::vector<int> J;
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] == 0) J.push_back(i);
  return J;
}

Int RootSystem::weyl_dimension(const Weight& lambda) const {
  check_weight(lambda);
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_dimension requires a dominant weight");
  Int num = 1, den = 1;
  for (const auto& alpha : positive_roots_) {
    long long top = 0, bot = 0;
    for (int j = 0; j < rank_; ++j) {
      top += static_cast<long long>(alpha.coroot_in_simple[j]) * (lambda[j] + 1);
      bot += alpha.coroot_in_simple[j];
    }
    num *= top;
    den *= bot;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

}  // namespace pieri
