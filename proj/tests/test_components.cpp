#include "doctest.h"

#include "graycal/derivation.hpp"
#include "graycal/script_parser.hpp"
#include "graycal/theory_parser.hpp"

using namespace graycal;

namespace {

Expr1 V(size_t i) { return Expr1::var(i); }
Expr1 Pe(Expr1 a, Expr1 b) { return Expr1::app("P", {std::move(a), std::move(b)}); }
Expr1 Je() { return Expr1::app("J", {}); }

} // namespace

TEST_CASE("builtin theories match the documented shape") {
  Theory m = builtin_theory("pseudomonoid");
  CHECK(m.base.objects == std::vector<std::string>{"C"});
  CHECK(m.base.arrows.size() == 2);
  CHECK(m.cells.size() == 6);
  CHECK(m.equations.size() == 8);
  CHECK(validate_theory(m).empty());

  const CellDecl* aa = m.find_cell("aa");
  REQUIRE(aa);
  CHECK(aa->ctx == Context{"C", "C", "C"});
  CHECK(aa->lhs == Pe(V(0), Pe(V(1), V(2))));
  CHECK(aa->rhs == Pe(Pe(V(0), V(1)), V(2)));

  const EqDecl* tri = m.find_equation("triangle");
  REQUIRE(tri);
  // (rr_A * X) . aa_{A,I,X} = A * ll_X
  Expr2 lhs = Expr2::comp(Expr2::app("P", {Expr2::gen("rr", {V(0)}), Expr2::id(V(1))}),
                          Expr2::gen("aa", {V(0), Je(), V(1)}));
  Expr2 rhs = Expr2::app("P", {Expr2::id(V(0)), Expr2::gen("ll", {V(1)})});
  CHECK(expr2_equal(tri->lhs, lhs));
  CHECK(expr2_equal(tri->rhs, rhs));

  Theory g0 = builtin_theory("example-G0");
  CHECK(g0.base.objects.size() == 6);
  CHECK(g0.base.arrows.size() == 4);
  CHECK(g0.cells.empty());

  CHECK_THROWS_AS((void)builtin_theory("no-such"), GrayError);
}

TEST_CASE("mutating a builtin cell boundary fails validation") {
  Theory m = builtin_theory("pseudomonoid");
  Theory broken = m;
  broken.cells[0].rhs = Pe(V(0), Pe(V(1), V(2))); // aa now maps lhs to itself shape-wise... still fine
  // make it genuinely ill-formed: swap variable order
  broken.cells[0].rhs = Pe(Pe(V(1), V(0)), V(2));
  CHECK(!validate_theory(broken).empty());
}

TEST_CASE("check_expr1 accepts exactly linear ordered expressions") {
  Theory m = builtin_theory("pseudomonoid");
  CHECK(check_expr1(m, {"C", "C", "C"}, Pe(V(0), Pe(V(1), V(2)))) == "C");
  CHECK(check_expr1(m, {"C"}, V(0)) == "C");
  CHECK_THROWS_AS((void)check_expr1(m, {"C"}, Pe(V(0), V(0))), CheckFailure);       // nonlinear
  CHECK_THROWS_AS((void)check_expr1(m, {"C", "C"}, Pe(V(1), V(0))), CheckFailure);  // out of order
  CHECK_THROWS_AS((void)check_expr1(m, {"C", "C"}, V(0)), CheckFailure);            // unused entry
  CHECK_THROWS_AS((void)check_expr1(m, {}, Expr1::app("Q", {})), CheckFailure);     // unknown symbol
  CHECK_THROWS_AS((void)check_expr1(m, {"C"}, Expr1::app("P", {V(0)})), CheckFailure); // arity
}

TEST_CASE("infer_expr2 computes the pentagon composite boundary") {
  Theory m = builtin_theory("pseudomonoid");
  // Comp(aa[P(A,B),X,D], aa[A,B,P(X,D)]) : A*(B*(X*D)) -> ((A*B)*X)*D
  Expr2 e = Expr2::comp(Expr2::gen("aa", {Pe(V(0), V(1)), V(2), V(3)}),
                        Expr2::gen("aa", {V(0), V(1), Pe(V(2), V(3))}));
  Boundary2 b = infer_expr2(m, {"C", "C", "C", "C"}, e);
  CHECK(b.src == Pe(V(0), Pe(V(1), Pe(V(2), V(3)))));
  CHECK(b.tgt == Pe(Pe(Pe(V(0), V(1)), V(2)), V(3)));
  CHECK(b.object == "C");

  Expr2 idp = Expr2::id(Pe(V(0), V(1)));
  Boundary2 bi = infer_expr2(m, {"C", "C"}, idp);
  CHECK(bi.src == bi.tgt);

  // mismatched middle: aa after aa does not compose
  Expr2 bad = Expr2::comp(Expr2::gen("aa", {V(0), V(1), V(2)}),
                          Expr2::gen("aa", {V(0), V(1), V(2)}));
  CHECK_THROWS_AS((void)infer_expr2(m, {"C", "C", "C"}, bad), CheckFailure);
}

TEST_CASE("substitution operations") {
  // 1in1: beta = P(B1,B2), args (P(A,B), X) -> P(P(A,B),X)
  Expr1 beta = Pe(V(0), V(1));
  Expr1 r = subst_1in1(beta, {Pe(V(0), V(1)), V(0)}, {2, 1});
  CHECK(r == Pe(Pe(V(0), V(1)), V(2)));

  // 1in2: aa[A,B,X][X := P(Y,Z)] = aa[A,B,P(Y,Z)]
  Expr2 phi = Expr2::gen("aa", {V(0), V(1), V(2)});
  Expr2 s = subst_1in2(phi, {V(0), V(0), Pe(V(0), V(1))}, {1, 1, 2});
  CHECK(expr2_equal(s, Expr2::gen("aa", {V(0), V(1), Pe(V(2), V(3))})));

  // 2in1: gamma = P(A1,A2), args (phi, Id(X)) -> App(P, [phi, Id(X)])
  Expr2 anyphi = Expr2::gen("ll", {V(0)});
  Expr2 t = subst_2in1(beta, {anyphi, Expr2::id(V(0))}, {1, 1});
  CHECK(expr2_equal(t, Expr2::app("P", {Expr2::gen("ll", {V(0)}), Expr2::id(V(1))})));

  // constants become nullary applications
  Expr2 u = subst_2in1(Pe(Je(), V(0)), {anyphi}, {1});
  CHECK(expr2_equal(u, Expr2::app("P", {Expr2::app("J", {}), anyphi})));
}

TEST_CASE("boundaries commute with substitution (property)") {
  Theory m = builtin_theory("pseudomonoid");
  // phi = aa[A,B,X] over (C,C,C); substitute gammas for its context
  Expr2 phi = Expr2::gen("aa", {V(0), V(1), V(2)});
  std::vector<Expr1> gammas = {Pe(V(0), V(1)), Je(), Pe(V(0), Pe(V(1), V(2)))};
  std::vector<size_t> vc = {2, 0, 3};
  Context big(5, "C");
  Boundary2 before = infer_expr2(m, {"C", "C", "C"}, phi);
  Expr2 substituted = subst_1in2(phi, gammas, vc);
  Boundary2 after = infer_expr2(m, big, substituted);
  CHECK(after.src == subst_1in1(before.src, gammas, vc));
  CHECK(after.tgt == subst_1in1(before.tgt, gammas, vc));
}

TEST_CASE("theory parse, serialize, round trip") {
  Theory m = builtin_theory("pseudomonoid");
  TheoryParse again = parse_theory(serialize_theory(m));
  REQUIRE(again.theory.has_value());
  CHECK(*again.theory == m);

  auto tiny = parse_theory("theory T\nobject A\n");
  REQUIRE(tiny.theory.has_value());
  CHECK(tiny.theory->base.objects == std::vector<std::string>{"A"});
  CHECK(tiny.theory->base.arrows.empty());
  CHECK(tiny.theory->cells.empty());
  CHECK(tiny.theory->equations.empty());

  auto bad = parse_theory("theory T\nobject C\narrow P : C C -> D\n");
  CHECK(!bad.theory.has_value());
  REQUIRE(!bad.diags.empty());
  bool found = false;
  for (const auto& d : bad.diags)
    found |= d.message.find("unknown object D") != std::string::npos;
  CHECK(found);
}

TEST_CASE("derivation checking: naturality and friends") {
  Theory m = builtin_theory("pseudomonoid");
  std::vector<EqDecl> none;

  // refl on a checked expression
  EqDerivation refl{DRefl{{{"C"}, Expr2::gen("ll", {V(0)}), {"A"}}}};
  EqSequent s = check_eq_derivation(m, none, refl);
  CHECK(s.src == Pe(Je(), V(0)));
  CHECK(s.tgt == V(0));
  CHECK(expr2_equal(s.lhs, s.rhs));

  // naturality of ll at ll_A:
  //   comp(ll_A, ll_{I*A}) = comp(ll_A, P(J(), ll_A))
  EqDerivation nat{DNat{"ll", {{{"C"}, Expr2::gen("ll", {V(0)}), {"A"}}}}};
  EqSequent ns = check_eq_derivation(m, none, nat);
  CHECK(ns.src == Pe(Je(), Pe(Je(), V(0))));
  CHECK(ns.tgt == V(0));
  Expr2 want_lhs = Expr2::comp(Expr2::gen("ll", {V(0)}), Expr2::gen("ll", {Pe(Je(), V(0))}));
  Expr2 want_rhs = Expr2::comp(Expr2::gen("ll", {V(0)}),
                               Expr2::app("P", {Expr2::app("J", {}), Expr2::gen("ll", {V(0)})}));
  CHECK(expr2_equal(ns.lhs, want_lhs));
  CHECK(expr2_equal(ns.rhs, want_rhs));

  // func-id with a nullary symbol: J() = id J()
  EqDerivation fid{DFuncId{"J", {}}};
  EqSequent fs = check_eq_derivation(m, none, fid);
  CHECK(fs.ctx.empty());
  CHECK(expr2_equal(fs.lhs, Expr2::app("J", {})));
  CHECK(expr2_equal(fs.rhs, Expr2::id(Je())));

  // axiom instantiation at a composite argument
  EqDerivation ax{DEqAxiom{"ll_inv_l", {{{"C", "C"}, Pe(V(0), V(1)), {"A", "B"}}}}};
  EqSequent as = check_eq_derivation(m, none, ax);
  CHECK(as.ctx == Context{"C", "C"});
  CHECK(expr2_equal(as.lhs, Expr2::comp(Expr2::gen("ll_inv", {Pe(V(0), V(1))}),
                                        Expr2::gen("ll", {Pe(V(0), V(1))}))));
  CHECK(expr2_equal(as.rhs, Expr2::id(Pe(Je(), Pe(V(0), V(1))))));

  // unknown axiom
  EqDerivation bad{DEqAxiom{"nope", {}}};
  CHECK_THROWS_AS((void)check_eq_derivation(m, none, bad), CheckFailure);
}

TEST_CASE("associativity-insensitive comparison of composites") {
  Expr2 a = Expr2::gen("ll", {V(0)});
  Expr2 b = Expr2::gen("ll_inv", {V(0)});
  Expr2 c = Expr2::id(V(0));
  CHECK(expr2_equal(Expr2::comp(Expr2::comp(a, b), c), Expr2::comp(a, Expr2::comp(b, c))));
  CHECK(!expr2_equal(Expr2::comp(a, b), Expr2::comp(b, a)));
  CHECK(!expr2_equal(Expr2::comp(a, b), Expr2::comp(a, Expr2::comp(b, c))));
}

TEST_CASE("script parsing and ordering") {
  auto sp = parse_script(
      "lemma one [A:C] : comp(ll[A], ll_inv[A]) = id A by (axiom ll_inv_r A)\n"
      "lemma two [A:C] : comp(ll[A], ll_inv[A]) = id A by (axiom one A)\n");
  REQUIRE(sp.script.has_value());
  Theory m = builtin_theory("pseudomonoid");
  ScriptReport rep = check_script(m, *sp.script);
  REQUIRE(rep.lemmas.size() == 2);
  CHECK(rep.lemmas[0].passed);
  CHECK(rep.lemmas[1].passed);

  // citing a later lemma fails
  auto sp2 = parse_script(
      "lemma one [A:C] : comp(ll[A], ll_inv[A]) = id A by (axiom two A)\n"
      "lemma two [A:C] : comp(ll[A], ll_inv[A]) = id A by (axiom ll_inv_r A)\n");
  REQUIRE(sp2.script.has_value());
  ScriptReport rep2 = check_script(m, *sp2.script);
  CHECK(!rep2.lemmas[0].passed);
  CHECK(rep2.lemmas[1].passed);

  // empty script
  auto sp3 = parse_script("");
  REQUIRE(sp3.script.has_value());
  CHECK(check_script(m, *sp3.script).lemmas.empty());
}

TEST_CASE("script serialize round trip") {
  auto sp = parse_script(
      "lemma one [A:C] : comp(ll[A], ll_inv[A]) = id A by (axiom ll_inv_r A)\n");
  REQUIRE(sp.script.has_value());
  std::string printed = serialize_script(*sp.script);
  auto sp2 = parse_script(printed);
  REQUIRE(sp2.script.has_value());
  CHECK(serialize_script(*sp2.script) == printed);
}
