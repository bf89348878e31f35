// Command-line frontend: expand | paths | verify | weyl.
// Exit codes: 0 success, 1 identity failure or computation error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pieri/json_io.hpp"
#include "pieri/verify.hpp"

namespace {

using namespace pieri;

struct Options {
  std::string type = "A2";
  std::string lambda;
  std::string w;
  std::string le_w;
  std::string format = "json";
  std::string output;
  std::string suite = "all";
  int lambda_box = 1;
  int mu_box = 1;
  int jobs = 1;
};

RootSystem make_root_system(const std::string& type) {
  if (type.size() != 2) throw std::invalid_argument("root system selector must look like 'A2'");
  return RootSystem::build(type[0], type[1] - '0');
}

Weight parse_lambda(const RootSystem& rs, const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
  Weight w{std::move(c)};
  rs.check_weight(w);
  return w;
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + opt.output);
  out << payload;
}

std::string tsv_weight(const Weight& w) {
  std::string s;
  for (int j = 0; j < w.rank(); ++j) {
    if (j) s += ",";
    s += std::to_string(w[j]);
  }
  return s;
}

int cmd_expand(const Options& opt) {
  RootSystem rs = make_root_system(opt.type);
  WeylGroup W(std::move(rs));
  Weight lambda = parse_lambda(W.root_system(), opt.lambda);
  if (!lambda.is_dominant()) throw std::invalid_argument("lambda must be dominant");
  EltId w = W.from_word(parse_word(opt.w, W.rank()));

  Expansion ex = expand(W, lambda, w);
  std::string payload;
  if (opt.format == "json") {
    payload = expansion_to_json(W, ex).dump(2) + "\n";
  } else {
    std::string s;
    for (const auto& [v, coeff] : ex.terms)
      for (const auto& [mu, c] : coeff.terms())
        s += word_str(W.word(v)) + "\t" + tsv_weight(mu) + "\t" + c.str() + "\n";
    payload = s;
  }
  emit(opt, payload);
  return 0;
}

int cmd_paths(const Options& opt) {
  RootSystem rs = make_root_system(opt.type);
  WeylGroup W(std::move(rs));
  Weight lambda = parse_lambda(W.root_system(), opt.lambda);
  PathModel model(W, lambda);
  PathSet ps = model.generate();

  std::optional<EltId> bound;
  if (!opt.le_w.empty()) {
    bound = W.from_word(parse_word(opt.le_w, W.rank()));
    ps = model.restrict_le(ps, *bound);
  }

  std::string payload;
  if (opt.format == "json") {
    Json out;
    out["root_system"] = W.root_system().name();
    out["lambda"] = weight_to_json(lambda);
    if (bound) out["w"] = word_to_json(W.word(*bound));
    Json arr = Json::array();
    for (const auto& p : ps.paths) {
      Json rec = path_to_json(p);
      rec["iota"] = word_to_json(W.word(model.initial_direction(p).min_rep));
      if (bound) rec["v"] = word_to_json(W.word(model.final_direction(p, *bound)));
      arr.push_back(std::move(rec));
    }
    out["paths"] = std::move(arr);
    payload = out.dump(2) + "\n";
  } else {
    std::string s;
    for (const auto& p : ps.paths) {
      std::string dirs, breaks;
      for (std::size_t j = 0; j < p.dirs.size(); ++j) {
        if (j) dirs += "|";
        dirs += tsv_weight(p.dirs[j]);
      }
      for (std::size_t j = 0; j < p.breaks.size(); ++j) {
        if (j) breaks += ",";
        breaks += format_rational(p.breaks[j]);
      }
      s += dirs + "\t" + breaks + "\t" + tsv_weight(endpoint(p)) + "\t" +
           word_str(W.word(model.initial_direction(p).min_rep));
      if (bound) s += "\t" + word_str(W.word(model.final_direction(p, *bound)));
      s += "\n";
    }
    payload = s;
  }
  emit(opt, payload);
  return 0;
}

int cmd_weyl(const Options& opt) {
  RootSystem rs = make_root_system(opt.type);
  WeylGroup W(std::move(rs));
  std::string payload;
  if (opt.format == "json") {
    Json out;
    out["root_system"] = W.root_system().name();
    Json elements = Json::array();
    for (EltId a = 0; a < W.size(); ++a) {
      Json e;
      e["word"] = word_to_json(W.word(a));
      e["length"] = W.length(a);
      elements.push_back(std::move(e));
    }
    out["elements"] = std::move(elements);
    Json rows = Json::array();
    for (EltId u = 0; u < W.size(); ++u) {
      Json row = Json::array();
      for (EltId v = 0; v < W.size(); ++v) row.push_back(W.bruhat_leq(u, v) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    out["bruhat"] = std::move(rows);
    payload = out.dump(2) + "\n";
  } else {
    std::string s;
    for (EltId a = 0; a < W.size(); ++a) {
      std::string bits;
      for (EltId v = 0; v < W.size(); ++v) bits += W.bruhat_leq(a, v) ? '1' : '0';
      s += word_str(W.word(a)) + "\t" + std::to_string(W.length(a)) + "\t" + bits + "\n";
    }
    payload = s;
  }
  emit(opt, payload);
  return 0;
}

int cmd_verify(const Options& opt) {
  RootSystem rs = make_root_system(opt.type);
  WeylGroup W(std::move(rs));
  std::vector<VerificationReport> reports;
  const std::string& suite = opt.suite;
  bool all = suite == "all";
  if (all || suite == "theorem")
    reports.push_back(verify_theorem(W, opt.lambda_box, opt.mu_box, opt.jobs));
  if (all || suite == "commutation" || suite == "ops")
    reports.push_back(verify_commutation(W, opt.lambda_box, opt.mu_box, opt.jobs));
  if (all || suite == "braid" || suite == "ops")
    reports.push_back(verify_operator_algebra(W, opt.lambda_box, opt.mu_box));
  if (all || suite == "strings")
    reports.push_back(verify_string_lemma_grid(W, opt.lambda_box, opt.mu_box));
  if (all || suite == "dimensions") {
    reports.push_back(verify_dimensions(W, opt.lambda_box));
    reports.push_back(verify_crystal_roundtrip(W, opt.lambda_box));
    reports.push_back(verify_corollary(W, opt.lambda_box));
  }
  if (reports.empty())
    throw std::invalid_argument(
        "unknown suite (expected theorem|commutation|braid|strings|dimensions|ops|all)");

  std::string payload;
  bool ok = true;
  for (const auto& rep : reports) {
    payload += report_to_json(rep).dump() + "\n";
    ok = ok && rep.pass;
  }
  emit(opt, payload);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Pieri-Chevalley expansions via the Littelmann path model"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    cmd->add_option("--type", opt.type, "root system, e.g. A2, B2, G2")->required();
    if (needs_lambda)
      cmd->add_option("--lambda", opt.lambda, "dominant weight, comma-separated")->required();
    cmd->add_option("--format", opt.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--output", opt.output, "write to file instead of stdout");
  };

  auto* expand_cmd = app.add_subcommand("expand", "expand y^lambda [O_w] over Schubert classes");
  add_common(expand_cmd, true);
  expand_cmd->add_option("--w", opt.w, "Weyl word, e.g. s1s2 or 1,2 (e for identity)")
      ->required();

  auto* paths_cmd = app.add_subcommand("paths", "list the path model T^lambda");
  add_common(paths_cmd, true);
  paths_cmd->add_option("--le-w", opt.le_w, "restrict to initial direction <= w");

  auto* weyl_cmd = app.add_subcommand("weyl", "list Weyl group elements and Bruhat order");
  add_common(weyl_cmd, false);

  auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
  verify_cmd
      ->add_option("suite", opt.suite,
                   "theorem|commutation|braid|strings|dimensions|ops|all")
      ->required();
  verify_cmd->add_option("--type", opt.type, "root system")->required();
  verify_cmd->add_option("--lambda-box", opt.lambda_box, "dominant weight coordinate bound");
  verify_cmd->add_option("--mu-box", opt.mu_box, "monomial coordinate bound");
  verify_cmd->add_option("--jobs", opt.jobs, "parallel workers (deterministic aggregation)");
  verify_cmd->add_option("--output", opt.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("expand")) return cmd_expand(opt);
    if (app.got_subcommand("paths")) return cmd_paths(opt);
    if (app.got_subcommand("weyl")) return cmd_weyl(opt);
    if (app.got_subcommand("verify")) return cmd_verify(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
