// Acceptance suite: runs every criterion at its stated grid and tolerance
// (all checks are exact) and prints one PASS/FAIL line per criterion.
//
// usage: acceptance_tests <path-to-cli> <golden-dir>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pieri/json_io.hpp"
#include "pieri/verify.hpp"

using namespace pieri;

namespace {

struct Grid {
  const char* name;
  int lambda_box;
  int mu_box;
};

// A1/A2/B2 at box 2, G2 at lambda box 1, plus A3 at box 1
constexpr std::array<Grid, 5> kGrids = {
    Grid{"A1", 2, 2}, Grid{"A2", 2, 2}, Grid{"B2", 2, 2}, Grid{"G2", 1, 2}, Grid{"A3", 1, 1}};

WeylGroup make(const char* name) {
  return WeylGroup(RootSystem::build(name[0], name[1] - '0'));
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult res;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

std::string describe(const VerificationReport& rep) {
  return report_to_json(rep).dump();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance_tests <path-to-cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  // 1. Theorem identity on every grid
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      auto W = make(g.name);
      auto rep = verify_theorem(W, g.lambda_box, g.mu_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    report(1, "theorem identity Y^lambda T_{w^-1} = sum T_{v^-1} Y^{eta(1)} on "
              "A1/A2/B2/G2/A3 grids", pass, detail);
  }

  // 2. Commutation relation
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      auto W = make(g.name);
      auto rep = verify_commutation(W, g.lambda_box, g.mu_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    report(2, "commutation relation Y^lambda T_i = T_i Y^{s_i lambda} + divided term",
           pass, detail);
  }

  // 3. Demazure operator algebra
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      auto W = make(g.name);
      auto rep = verify_operator_algebra(W, g.lambda_box, g.mu_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    report(3, "idempotence, braid relations, defining relation", pass, detail);
  }

  // 4. Path-model counts and characters
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      auto W = make(g.name);
      auto rep = verify_dimensions(W, g.lambda_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    report(4, "|T^lambda| = Weyl dimension and character = T_{w0}(e^lambda)", pass, detail);
  }

  // 5. Crystal round-trips
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      auto W = make(g.name);
      auto rep = verify_crystal_roundtrip(W, g.lambda_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    report(5, "e_i f_i = id on dom(f_i) and f_i e_i = id on dom(e_i), exhaustive", pass,
           detail);
  }

  // 6. String lemma on the A1/A2/B2 grids
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      if (std::string(g.name) != "A1" && std::string(g.name) != "A2" &&
          std::string(g.name) != "B2")
        continue;
      auto W = make(g.name);
      auto rep = verify_string_lemma_grid(W, g.lambda_box, g.mu_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    report(6, "string lemma, string-wise operator equality on A1/A2/B2 grids", pass, detail);
  }

  // 7. Corollary consistency + golden files
  {
    bool pass = true;
    std::string detail;
    for (const auto& g : kGrids) {
      auto W = make(g.name);
      auto rep = verify_corollary(W, g.lambda_box);
      if (!rep.pass) {
        pass = false;
        detail = describe(rep);
        break;
      }
    }
    if (pass) {
      struct GoldenCase {
        const char* args;
        const char* file;
      };
      const GoldenCase cases[] = {
          {"expand --type A1 --lambda 1 --w s1", "expand_a1_lambda1_s1.json"},
          {"expand --type A2 --lambda 1,0 --w s1s2", "expand_a2_lambda10_s1s2.json"},
      };
      for (const auto& c : cases) {
        auto res = run_cli(cli, c.args);
        std::string expected = read_file(golden + "/" + c.file);
        if (res.exit_code != 0 || expected.empty() || res.out != expected) {
          pass = false;
          detail = std::string("golden mismatch for: ") + c.args;
          break;
        }
      }
    }
    report(7, "corollary consistency (w=1 case, positivity, mass) and golden examples",
           pass, detail);
  }

  // 8. Byte-identical CLI output across repeated runs
  {
    bool pass = true;
    std::string detail;
    const char* commands[] = {
        "expand --type A2 --lambda 1,0 --w s1s2",
        "expand --type A2 --lambda 0,0 --w s1",
        "expand --type B2 --lambda 2,1 --w s2s1s2 --format tsv",
        "paths --type A2 --lambda 1,1 --le-w s1s2s1",
        "paths --type A1 --lambda 1 --le-w e",
        "paths --type G2 --lambda 1,0 --format tsv",
        "weyl --type B2",
        "weyl --type A2 --format tsv",
        "verify dimensions --type A2 --lambda-box 1",
        "verify theorem --type A2 --lambda-box 1 --mu-box 1 --jobs 4",
    };
    for (const char* args : commands) {
      auto first = run_cli(cli, args);
      auto second = run_cli(cli, args);
      if (first.exit_code != 0 || second.exit_code != 0 || first.out != second.out ||
          first.out.empty()) {
        pass = false;
        detail = std::string("non-deterministic or failing command: ") + args;
        break;
      }
    }
    report(8, "identical invocations produce byte-identical output", pass, detail);
  }

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
