#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wordmetrics/cli.hpp"
#include "wordmetrics/group.hpp"

using namespace wordmetrics;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wordmetrics");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        row.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

// nu_H(S,T) for Z_n by layered sums of residues, independent of the library.
std::string z_nu_h(unsigned n, unsigned s, unsigned t) {
  std::vector<int> len(n, -1);
  unsigned layer = 1;  // {0}
  len[0] = 0;
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    unsigned next = 0;
    for (unsigned x = 0; x < n; ++x) {
      if ((layer >> x) & 1U) {
        for (unsigned a = 0; a < n; ++a) {
          if ((s >> a) & 1U) next |= 1U << ((x + a) % n);
        }
      }
    }
    for (unsigned x = 0; x < n; ++x) {
      if (((next >> x) & 1U) && len[x] < 0) len[x] = k;
    }
    layer = next;
  }
  int sup = 0;
  for (unsigned x = 0; x < n; ++x) {
    if ((t >> x) & 1U) {
      if (len[x] < 0) return "inf";
      sup = std::max(sup, len[x]);
    }
  }
  return std::to_string(sup);
}

std::string literal(unsigned mask, unsigned n) {
  std::string s = "[";
  bool first = true;
  for (unsigned x = 0; x < n; ++x) {
    if ((mask >> x) & 1U) {
      s += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
  }
  return s + "]";
}

const char* kZ6 = R"({"kind":"cyclic","n":6})";

}  // namespace

TEST_CASE("nuH-table on Z6 matches an independent recomputation") {
  const Run r = run({"nuH-table", "--group", kZ6});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 65);
  REQUIRE(rows[0].size() == 65);
  bool saw_inf = false;
  for (unsigned s = 0; s < 64; ++s) {
    CHECK(rows[s + 1][0] == literal(s, 6));
    for (unsigned t = 0; t < 64; ++t) {
      CHECK(rows[0][t + 1] == literal(t, 6));
      const std::string want = z_nu_h(6, s, t);
      CHECK(rows[s + 1][t + 1] == want);
      saw_inf = saw_inf || want == "inf";
    }
  }
  CHECK(saw_inf);
}

TEST_CASE("json output writes inf as a string") {
  const Run r = run({"norm", "--group", kZ6, "--s", "[2]", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 6);
  CHECK(j[1]["nu_S"] == "inf");
  CHECK(j[4]["nu_S"] == 2);
}

TEST_CASE("metric and check-axioms") {
  const Run m = run({"metric", "--group", kZ6, "--s", "[1,5]"});
  CHECK(m.out.find("\n2,5,3\n") != std::string::npos);
  const Run a = run({"check-axioms", "--group", kZ6, "--s", "[1,5]"});
  CHECK(a.code == 0);
  CHECK(a.out.find("metric: yes") != std::string::npos);
  const Run b = run({"check-axioms", "--group", R"({"kind":"cyclic","n":4})", "--s", "[1]"});
  CHECK(b.out.find("\nmetric: no") != std::string::npos);
  CHECK(b.out.find("symmetric: no") != std::string::npos);
}

TEST_CASE("verification subcommands exit 0 when nothing fails") {
  CHECK(run({"transport-verify", "--group", "D4", "--normal", "[0,2]"}).code == 0);
  CHECK(run({"sdprod-verify", "--group", "S3", "--h", "[0,1]", "--k", "[0,3,4]"}).code == 0);
  CHECK(run({"sdprod-verify", "--group",
             R"({"kind":"semidirect","h":{"kind":"cyclic","n":2},"k":{"kind":"cyclic","n":3},"action":[[0,1,2],[0,2,1]]})"})
            .code == 0);
  const Run inv = run({"invariants", "--group", "S3"});
  CHECK(inv.out.find("rank_n,1,") != std::string::npos);
  CHECK(inv.out.find("Delta,2,") != std::string::npos);
}

TEST_CASE("actions and star-sets") {
  const Run a = run({"action-metric", "--spec", R"({"kind":"natural","n":3})", "--s", "[1,2,5]"});
  CHECK(a.out.find("\n0,2,1\n") != std::string::npos);
  const Run q = run({"action-metric", "--quandle", R"({"kind":"dihedral_quandle","n":3})", "--s",
                     "sigma:[0,1]"});
  CHECK(q.code == 0);
  CHECK(q.out.find("inf") == std::string::npos);
  const Run s = run({"star", "--spec", R"({"kind":"dihedral_quandle","n":5})", "--s", "[0,1]",
                     "--m", "2"});
  CHECK(s.out.find("power,2,\"[0,1,2,4]\"") != std::string::npos);
}

TEST_CASE("errors") {
  const Run cap = run({"nuH-table", "--group", R"({"kind":"cyclic","n":9})"});
  CHECK(cap.code == kExitUsage);
  CHECK(cap.err.find("--cap") != std::string::npos);
  CHECK(run({"nuH-table", "--group", R"({"kind":"cyclic","n":9})", "--cap", "9"}).code == 0);
  const Run bad = run({"norm", "--group", R"({"kind":"cyclic","n":6)", "--s", "[1]"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("byte") != std::string::npos);
  const Run where = run({"norm", "--group", R"({"kind":"cyclic","n":"six"})", "--s", "[1]"});
  CHECK(where.err.find("$.n") != std::string::npos);
  CHECK(run({"norm", "--group", kZ6, "--s", "[9]"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"norm", "--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic and --out writes a file") {
  const std::vector<std::string> args{"transport-verify", "--group", "Z12", "--normal", "[0,4,8]",
                                      "--seed", "3", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["ok"] == true);
  const std::string path = "wordmetrics_cli_test.csv";
  const Run f = run({"norm", "--group", kZ6, "--s", "[1]", "--out", path});
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().rfind("x,nu_S\n0,0\n1,1\n", 0) == 0);
  std::remove(path.c_str());
}
