#include "doctest.h"

#include "graycal/script_parser.hpp"
#include "graycal/theory_parser.hpp"
#include "mutations.hpp"

#include <fstream>
#include <sstream>

using namespace graycal;
using namespace graycal::testfix;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProofScript kelly() {
  auto sp = parse_script(slurp(std::string(GRAYCAL_FIXTURE_DIR) + "/kelly.gpf"));
  REQUIRE(sp.script.has_value());
  return *sp.script;
}

} // namespace

TEST_CASE("kelly.gpf is accepted in full") {
  Theory m = builtin_theory("pseudomonoid");
  ScriptReport rep = check_script(m, kelly());
  REQUIRE(rep.lemmas.size() == 5);
  for (const auto& l : rep.lemmas) {
    INFO(l.name << ": " << l.message);
    CHECK(l.passed);
  }
  CHECK(rep.lemmas[0].name == "kelly-ll");
  CHECK(rep.lemmas[2].name == "kelly-lla");
  CHECK(rep.lemmas[4].name == "kelly-li-ri");
}

TEST_CASE("every single-node mutation of kelly.gpf is rejected") {
  Theory m = builtin_theory("pseudomonoid");
  ProofScript base = kelly();
  std::vector<ProofScript> mutants = mutate_script(base);
  CHECK(mutants.size() >= 50);
  size_t accepted = 0;
  for (const ProofScript& mut : mutants) {
    ScriptReport rep = check_script(m, mut);
    if (rep.all_passed())
      ++accepted;
  }
  CHECK(accepted == 0);
}

TEST_CASE("kelly.gpf survives a print-parse round trip") {
  Theory m = builtin_theory("pseudomonoid");
  ProofScript base = kelly();
  std::string printed = serialize_script(base);
  auto again = parse_script(printed);
  REQUIRE(again.script.has_value());
  CHECK(serialize_script(*again.script) == printed);
  CHECK(check_script(m, *again.script).all_passed());
}

TEST_CASE("the bundled theory file matches the builtin") {
  auto tp = parse_theory(slurp(std::string(GRAYCAL_FIXTURE_DIR) + "/pseudomonoid.gth"));
  REQUIRE(tp.theory.has_value());
  CHECK(*tp.theory == builtin_theory("pseudomonoid"));
}
