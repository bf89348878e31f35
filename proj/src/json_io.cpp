#include "pieri/json_io.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace pieri {

Json coeff_to_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

Int coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (int c : w.coords) a.push_back(c);
  return a;
}

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be an array of integers");
  std::vector<int> c;
  for (const auto& v : j) c.push_back(v.get<int>());
  return Weight(std::move(c));
}

Json group_ring_to_json(const GroupRingElt& f) {
  Json a = Json::array();
  for (const auto& [mu, c] : f.terms()) {
    Json t;
    t["mu"] = weight_to_json(mu);
    t["c"] = coeff_to_json(c);
    a.push_back(std::move(t));
  }
  return a;
}

GroupRingElt group_ring_from_json(const Json& j, Lattice tag) {
  GroupRingElt f(tag);
  for (const auto& t : j) f.add_term(weight_from_json(t.at("mu")), coeff_from_json(t.at("c")));
  return f;
}

Json word_to_json(std::span<const int> word) {
  Json a = Json::array();
  for (int i : word) a.push_back(i + 1);
  return a;
}

std::vector<int> word_from_json(const Json& j) {
  std::vector<int> w;
  for (const auto& v : j) {
    int letter = v.get<int>();
    if (letter < 1) throw std::invalid_argument("word letters are 1-based");
    w.push_back(letter - 1);
  }
  return w;
}

Json path_to_json(const LSPath& p) {
  Json out;
  Json dirs = Json::array();
  for (const auto& d : p.dirs) dirs.push_back(weight_to_json(d));
  out["dirs"] = std::move(dirs);
  Json breaks = Json::array();
  for (const auto& b : p.breaks) breaks.push_back(format_rational(b));
  out["breaks"] = std::move(breaks);
  out["endpoint"] = weight_to_json(endpoint(p));
  return out;
}

LSPath path_from_json(const Json& j, const Weight& lambda) {
  LSPath p;
  p.lambda = lambda;
  for (const auto& d : j.at("dirs")) p.dirs.push_back(weight_from_json(d));
  for (const auto& b : j.at("breaks")) p.breaks.push_back(parse_rational(b.get<std::string>()));
  check_path_encoding(p);
  return p;
}

Json expansion_to_json(const WeylGroup& W, const Expansion& ex) {
  Json out;
  out["root_system"] = W.root_system().name();
  out["lambda"] = weight_to_json(ex.lambda);
  out["w"] = word_to_json(W.word(ex.w));
  Json terms = Json::array();
  for (const auto& [v, coeff] : ex.terms) {
    Json t;
    t["v"] = word_to_json(W.word(v));
    t["coeff"] = group_ring_to_json(coeff);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Expansion expansion_from_json(const WeylGroup& W, const Json& j) {
  if (j.at("root_system").get<std::string>() != W.root_system().name())
    throw std::invalid_argument("expansion belongs to a different root system");
  Expansion ex;
  ex.lambda = weight_from_json(j.at("lambda"));
  ex.w = W.from_word(word_from_json(j.at("w")));
  for (const auto& t : j.at("terms")) {
    EltId v = W.from_word(word_from_json(t.at("v")));
    ex.terms.emplace(v, group_ring_from_json(t.at("coeff"), Lattice::x));
  }
  return ex;
}

Json report_to_json(const VerificationReport& rep) {
  Json out;
  out["identity"] = rep.identity;
  out["root_system"] = rep.root_system;
  out["params"] = rep.params;
  out["checked"] = rep.checked;
  out["skipped"] = rep.skipped;
  out["pass"] = rep.pass;
  if (rep.counterexample) {
    const auto& ce = *rep.counterexample;
    Json c;
    c["lambda"] = ce.lambda;
    c["w"] = ce.w;
    c["i"] = ce.i;
    c["mu"] = ce.mu;
    c["lhs"] = ce.lhs;
    c["rhs"] = ce.rhs;
    c["detail"] = ce.detail;
    out["counterexample"] = std::move(c);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

std::vector<int> parse_word(std::string_view text, int rank) {
  auto validate = [&](int letter) {
    if (letter < 1 || letter > rank)
      throw std::invalid_argument("generator index out of range: s" + std::to_string(letter));
    return letter - 1;
  };
  std::vector<int> out;
  // bare "1" is the group identity (the usual w = 1), not the letter s1
  if (text.empty() || text == "e" || text == "id" || text == "1") return out;
  if (text.find('s') != std::string_view::npos) {
    std::size_t k = 0;
    while (k < text.size()) {
      if (text[k] == 's') {
        std::size_t start = ++k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (start == k) throw std::invalid_argument("malformed word: " + std::string(text));
        out.push_back(validate(std::stoi(std::string(text.substr(start, k - start)))));
      } else if (text[k] == '*' || text[k] == ' ') {
        ++k;
      } else {
        throw std::invalid_argument("malformed word: " + std::string(text));
      }
    }
    return out;
  }
  // comma-separated 1-based indices
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed word: " + std::string(text));
    out.push_back(validate(std::stoi(std::string(tok))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace pieri
