#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pieri {

// A weight written in the fundamental-weight basis (omega_1, ..., omega_l).
// In this basis the coroot pairing <lambda, alpha_i^vee> is simply the i-th
// coordinate, which keeps all lattice arithmetic integral.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }

  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }

  // all coroot pairings >= 0
  bool is_dominant() const {
    for (int c : coords)
      if (c < 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += o.coords[j];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (std::size_t j = 0; j < coords.size(); ++j) coords[j] -= o.coords[j];
    return *this;
  }
  Weight& operator*=(int k) {
    for (int& c : coords) c *= k;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) {
    for (int& c : a.coords) c = -c;
    return a;
  }

  // lexicographic; used for deterministic term ordering everywhere
  auto operator<=>(const Weight&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(coords[j]);
    }
    return s + ")";
  }

 private:
  void check_rank(const Weight& o) const {
    if (coords.size() != o.coords.size())
      throw std::invalid_argument("Weight: rank mismatch");
  }
};

}  // namespace pieri
