#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mbb/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mbb");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = mbb::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
  return std::string(MBB_DATA_DIR) + "/" + name;
}

bool has(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("compute") {
  auto r = run_cli({"compute", data("mbba_example.txt")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "M = {e1, e2}"));
  CHECK(has(r.out, "G1 = x*e1 + 4/3*e1 + 2/3*e2"));
  CHECK(has(r.out, "x*e2 - 2/3*e1 - 1/3*e2"));
}

TEST_CASE("compute with json output") {
  auto r = run_cli({"--format", "json", "compute", data("mbba_example.txt")});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["M"].size() == 2);
  CHECK(j["basis"].size() == 4);
  CHECK(j["basis"][0][1]["coefficient"] == "4/3");
}

TEST_CASE("cap reached") {
  auto r = run_cli({"--max-degree", "0", "compute", data("mbba_example.txt")});
  CHECK(r.code == 3);
  CHECK(has(r.err, "codimension possibly infinite (cap 0 reached)"));
}

TEST_CASE("divide") {
  auto r = run_cli({"divide", data("prebasis_example.txt"), "--vector",
                    "x^3*e1 + x*y*e1 + x^3*y*e2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p1 = x\np2 = 2\np3 = 0\np4 = y\n"));
  CHECK(has(r.out, "NR = -x*e2 + y*e1 + 2*e2"));
  auto bad = run_cli({"divide", data("prebasis_example.txt"), "--vector", "x*e9"});
  CHECK(bad.code == 2);
}

TEST_CASE("check") {
  auto r = run_cli({"check", data("prebasis_example.txt")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "NOT a border basis; witness SV(G1,G2), NR = x*e1 + y*e1 + e1 + e2"));
  CHECK(has(r.out, "multiplication matrices commute: no (x, y)"));
  auto q = run_cli({"check", data("char_quot.txt")});
  CHECK(q.code == 0);
  CHECK(has(q.out, "quotient module border basis"));
  auto n = run_cli({"check", data("char_prebasis.txt")});
  CHECK(n.code == 0);
  CHECK(has(n.out, "NOT a quotient module border basis"));
  CHECK(has(n.out, "G1 = x^2*e1 - x*e1 + e2"));
  auto none = run_cli({"check", data("no_char_module.txt")});
  CHECK(none.code == 3);
  CHECK(has(none.err, "no order module characterizing M^S: x*e1 + S = y*e2 + S"));
}

TEST_CASE("multmat") {
  auto r = run_cli({"multmat", data("prebasis_example.txt")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "X_x =\n  [0 0 1 0 0 0]\n  [1 0 0 0 0 0]"));
  CHECK(has(r.out, "  [-1 1 0 0 0 0]\nX_y ="));
  CHECK(has(r.out, "commuting: no (x, y)"));
}

TEST_CASE("groebner, quotient and subideal") {
  auto g = run_cli({"groebner", data("mbba_example.txt")});
  CHECK(g.code == 0);
  CHECK(has(g.out, "GB4 = y*e2 - e2"));
  auto q = run_cli({"quotient", data("quotient_example.txt")});
  CHECK(q.code == 0);
  CHECK(has(q.out, "M^S = {e1 + S, e2 + S}"));
  auto s = run_cli({"subideal", data("subideal_example.txt")});
  CHECK(s.code == 0);
  CHECK(has(s.out, "O_F = {f1, f2}"));
  CHECK(has(s.out, "g1 = x*f1 + 4/3*f1 + 2/3*f2"));
  CHECK(has(s.out, "y*f2 - f2"));
}

TEST_CASE("usage and parse errors") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"--format", "xml", "compute", data("mbba_example.txt")}).code == 1);
  CHECK(run_cli({"compute", "/nonexistent/input.txt"}).code == 1);
  CHECK(run_cli({"divide", data("prebasis_example.txt")}).code == 1);
  CHECK(run_cli({"compute", data("subideal_example.txt")}).code == 1);

  auto path = std::filesystem::temp_directory_path() / "mbb_cli_bad_input.txt";
  {
    std::ofstream f(path);
    f << "ring Q[x,y]\nrank 2\norder degrevlex\nvectors:\nx*e1 +* y\n";
  }
  auto r = run_cli({"compute", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 2);
  CHECK(has(r.err, "line 5"));
}

TEST_CASE("proptest") {
  auto r = run_cli({"proptest", "--seed", "7", "--cases", "10"});
  CHECK(r.code == 0);
  CHECK_FALSE(has(r.out, "FAIL"));
  CHECK(has(r.out, "PASS"));
}
