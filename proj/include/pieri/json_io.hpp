#pragma once

#include <json.hpp>

#include <string_view>

#include "pieri/expansion.hpp"
#include "pieri/paths.hpp"
#include "pieri/verify.hpp"

namespace pieri {

// ordered_json keeps insertion order, which the byte-determinism contract
// relies on
using Json = nlohmann::ordered_json;

// coefficients: emitted as JSON numbers while they fit 64 bits, otherwise as
// decimal strings; the parsers accept both
Json coeff_to_json(const Int& c);
Int coeff_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

// sorted [{"mu": [...], "c": n}, ...]
Json group_ring_to_json(const GroupRingElt& f);
GroupRingElt group_ring_from_json(const Json& j, Lattice tag);

// canonical reduced word as a 1-based index list, e.g. s1s2 -> [1, 2]
Json word_to_json(std::span<const int> word);
std::vector<int> word_from_json(const Json& j);

// {"dirs": [[...]], "breaks": ["0","1/2","1"], "endpoint": [...]}
Json path_to_json(const LSPath& p);
LSPath path_from_json(const Json& j, const Weight& lambda);

// {"root_system": "...", "lambda": [...], "w": [...], "terms":
//   [{"v": [...], "coeff": [{"mu": [...], "c": n}, ...]}, ...]}
Json expansion_to_json(const WeylGroup& W, const Expansion& ex);
Expansion expansion_from_json(const WeylGroup& W, const Json& j);

Json report_to_json(const VerificationReport& rep);

// Weyl element input: "s1s2", "1,2", or "e"/"id"/"" for the identity;
// returns 0-based letters, validated against the rank
std::vector<int> parse_word(std::string_view text, int rank);

}  // namespace pieri
