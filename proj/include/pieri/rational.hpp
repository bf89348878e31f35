#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pieri {

// Exact rational scalar for path breakpoints and piecewise-linear evaluation.
// Magnitudes stay tiny at the supported ranks, so a 64-bit backbone suffices.
using Rational = boost::rational<long long>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

// "p/q", or just "p" when the denominator is 1
std::string format_rational(const Rational& r);

// accepts "p", "p/q", with optional sign; throws std::invalid_argument
Rational parse_rational(std::string_view s);

// lexicographic compare for rational vectors (std::vector<Rational> lacks <=>)
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace pieri
