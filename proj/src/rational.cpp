#include "pieri/rational.hpp"

#include <stdexcept>

namespace pieri {

std::string format_rational(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto to_ll = [](std::string_view t) -> long long {
    if (t.empty()) throw std::invalid_argument("bad rational literal");
    std::size_t pos = 0;
    long long v = std::stoll(std::string(t), &pos);
    if (pos != t.size()) throw std::invalid_argument("bad rational literal");
    return v;
  };
  if (slash == std::string_view::npos) return Rational(to_ll(s));
  long long num = to_ll(s.substr(0, slash));
  long long den = to_ll(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] < b[j]) return true;
    if (b[j] < a[j]) return false;
  }
  return a.size() < b.size();
}

}  // namespace pieri
