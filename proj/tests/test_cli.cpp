#include "doctest.h"

#include "graycal/cli.hpp"

#include <fstream>
#include <sstream>

using namespace graycal;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GRAYCAL_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GRAYCAL_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kT1 = "() u (C D); (B) g (); () h ()";
const std::string kT1Nf = "(A) g (); () u (E); () h ()";

} // namespace

TEST_CASE("golden outputs and exit codes") {
  struct Case {
    std::vector<std::string> args;
    int code;
    std::string golden_file;
  };
  const Case cases[] = {
      {{"normalize", "--theory", "example-G0", "--plain", kT1}, 0, "normalize_t1.txt"},
      {{"decide", "--theory", "example-G0", "--plain", kT1, kT1Nf}, 0, "decide_t1.txt"},
      {{"weigh", "--theory", "example-G0", "--plain", kT1}, 0, "weigh_t1.txt"},
      {{"weigh", "--theory", fixture("braid3.gth"), "--braided",
        "(P) x [Q | R] (); () x [P | R] (Q)"},
       0,
       "weigh_s.txt"},
      {{"check", "--theory", "pseudomonoid", fixture("kelly.gpf")}, 0, "check_kelly.txt"},
      {{"interp", "--theory", "pseudomonoid", "[A:C, B:C, X:C, D:C] |- P(A, P(B, P(X, D)))"},
       0,
       "interp_expr1.txt"},
      {{"interp", "--theory", "pseudomonoid", "[A:C, B:C, X:C, D:C] |- aa[A, B, P(X, D)]"},
       0,
       "interp_expr2.txt"},
      {{"render", kT1}, 0, "render_t1.txt"},
      {{"render", "--theory", fixture("braid3.gth"), "(P) x [Q | R] ()"}, 0,
       "render_cross.txt"},
      {{"render", "--theory", "example-G0", "id (A B)"}, 0, "render_id.txt"},
      {{"normalize", "--theory", fixture("braid3.gth"), "--braided", "() x [P |] ()"}, 0,
       "normalize_unit.txt"},
      {{"cp", "--theory", "example-G0", "--plain", "--max-cells", "3", "--max-width", "3"}, 0,
       "cp_plain.txt"},
      // the braided audit surfaces the known conflict-taxonomy gap
      {{"cp", "--theory", fixture("braid3.gth"), "--braided", "--max-cells", "3",
        "--max-width", "3"},
       1,
       "cp_braided.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.golden_file);
    RunResult r = run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out == golden(c.golden_file));
  }
}

TEST_CASE("exit code contract on failure paths") {
  // not equal -> 1
  RunResult ne = run({"decide", "--theory", "example-G0", "--plain", "id (A)", "id (A)"});
  CHECK(ne.code == 0);
  // the full twist is not connected to the identity braid
  RunResult ne2 = run({"decide", "--theory", fixture("braid3.gth"), "--braided",
                       "() x [P | Q] (); () x [Q | P] ()", "id (P Q)"});
  CHECK(ne2.code == 1);
  CHECK(ne2.out == "NOT EQUAL\n");

  // failing script -> 1
  RunResult bad = run({"check", "--theory", "pseudomonoid",
                       std::string(GRAYCAL_GOLDEN_DIR) + "/bad.gpf"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("ok   good") != std::string::npos);
  CHECK(bad.out.find("FAIL broken") != std::string::npos);

  // malformed term -> 2
  RunResult mal = run({"normalize", "--theory", "example-G0", "--plain", "() u (C D"});
  CHECK(mal.code == 2);
  CHECK(!mal.err.empty());

  // crossing in plain mode -> 2
  RunResult cross = run({"normalize", "--theory", fixture("braid3.gth"), "--plain",
                         "() x [P | Q] ()"});
  CHECK(cross.code == 2);

  // missing mode flag -> 2
  RunResult nomode = run({"normalize", "--theory", "example-G0", kT1});
  CHECK(nomode.code == 2);

  // boundary mismatch in decide -> 2
  RunResult bm = run({"decide", "--theory", "example-G0", "--plain", "() u ()", "id (A)"});
  CHECK(bm.code == 2);

  // unknown theory -> 2
  RunResult nt = run({"weigh", "--theory", "no-such-theory", "--plain", "id ()"});
  CHECK(nt.code == 2);

  // unknown subcommand -> 2
  RunResult ns = run({"frobnicate"});
  CHECK(ns.code == 2);
}

TEST_CASE("printed normal forms re-parse to the same term") {
  RunResult r = run({"normalize", "--theory", "example-G0", "--plain", kT1});
  REQUIRE(r.code == 0);
  std::string line = r.out.substr(0, r.out.find('\n'));
  std::string nf = line.substr(std::string("normal form: ").size());
  RunResult again = run({"normalize", "--theory", "example-G0", "--plain", nf});
  CHECK(again.code == 0);
  CHECK(again.out.find("normal form: " + nf) == 0);
  CHECK(again.out.find("steps: 0") != std::string::npos);
}
