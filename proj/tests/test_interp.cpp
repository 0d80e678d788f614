#include "doctest.h"

#include "graycal/interp.hpp"
#include "graycal/term_text.hpp"

#include <functional>
#include <random>

using namespace graycal;

namespace {

Expr1 V(size_t i) { return Expr1::var(i); }
Expr1 Pe(Expr1 a, Expr1 b) { return Expr1::app("P", {std::move(a), std::move(b)}); }
Expr1 Je() { return Expr1::app("J", {}); }

FreeModel model() { return free_model(builtin_theory("pseudomonoid")); }

} // namespace

TEST_CASE("free model basics") {
  FreeModel m = model();
  CHECK(interp_ctx(m, {"C", "C"}) == ObjSeq{"C", "C"});

  // v(cell) boundaries equal the interpretation of the declared boundaries
  for (const auto& c : m.theory.cells) {
    OneCell l = interp_expr1(m, c.ctx, c.lhs);
    OneCell r = interp_expr1(m, c.ctx, c.rhs);
    CHECK(boundary(m.theory.base, l).source == interp_ctx(m, c.ctx));
    CHECK(boundary(m.theory.base, l).target == ObjSeq{c.object});
    CHECK(boundary(m.theory.base, r).source == interp_ctx(m, c.ctx));
  }

  FreeModel g0 = free_model(builtin_theory("example-G0"));
  CHECK(g0.theory.base.arrows.size() == 4);
  CHECK(g0.theory.cells.empty());
}

TEST_CASE("interpretation of 1-cells") {
  FreeModel m = model();
  const Multigraph& mg = m.theory.base;

  // [[A*(B*(X*D))]] = [(C,C)P(); (C)P(); ()P()]
  Expr1 nested = Pe(V(0), Pe(V(1), Pe(V(2), V(3))));
  OneCell c = interp_expr1(m, Context(4, "C"), nested);
  OneCell want{{"C", "C", "C", "C"},
               {MultiarrowCell{{"C", "C"}, "P", {}},
                MultiarrowCell{{"C"}, "P", {}},
                MultiarrowCell{{}, "P", {}}}};
  CHECK(c == want);

  // [[A]] = identity
  CHECK(interp_expr1(m, {"C"}, V(0)) == OneCell::identity({"C"}));

  // [[(A*B)*(X*D)]] = [()P(C,C); (C)P(); ()P()]
  Expr1 balanced = Pe(Pe(V(0), V(1)), Pe(V(2), V(3)));
  OneCell b = interp_expr1(m, Context(4, "C"), balanced);
  OneCell want2{{"C", "C", "C", "C"},
                {MultiarrowCell{{}, "P", {"C", "C"}},
                 MultiarrowCell{{"C"}, "P", {}},
                 MultiarrowCell{{}, "P", {}}}};
  CHECK(b == want2);
  (void)mg;
}

TEST_CASE("norm paths from the worked computations") {
  FreeModel m = model();

  // outer A*(B*X), inner X := C*D: empty path
  {
    Expr1 outer = Pe(V(0), Pe(V(1), V(2)));
    std::vector<std::pair<Context, Expr1>> inners = {
        {{"C"}, V(0)}, {{"C"}, V(0)}, {{"C", "C"}, Pe(V(0), V(1))}};
    InterpPath p = norm_path(m, Context(3, "C"), outer, inners);
    CHECK(p.steps.empty());
    // endpoints: both the substituted interpretation
    Expr1 subd = Pe(V(0), Pe(V(1), Pe(V(2), V(3))));
    CHECK(p.target == interp_expr1(m, Context(4, "C"), subd));
    CHECK(p.source == p.target);
  }

  // outer (A*B)*X, inner X := C*D: exactly one interchange step
  {
    Expr1 outer = Pe(Pe(V(0), V(1)), V(2));
    std::vector<std::pair<Context, Expr1>> inners = {
        {{"C"}, V(0)}, {{"C"}, V(0)}, {{"C", "C"}, Pe(V(0), V(1))}};
    InterpPath p = norm_path(m, Context(3, "C"), outer, inners);
    REQUIRE(p.steps.size() == 1);
    const auto* r = std::get_if<RewriteStep>(&p.steps[0]);
    REQUIRE(r);
    CHECK(r->inverse);
    CHECK(r->redex.kind == RedexKind::Interchange);
    // P o (P x C) o (C x C x P)  ->  P o (P x P)
    OneCell src{{"C", "C", "C", "C"},
                {MultiarrowCell{{"C", "C"}, "P", {}},
                 MultiarrowCell{{}, "P", {"C"}},
                 MultiarrowCell{{}, "P", {}}}};
    OneCell tgt{{"C", "C", "C", "C"},
                {MultiarrowCell{{}, "P", {"C", "C"}},
                 MultiarrowCell{{"C"}, "P", {}},
                 MultiarrowCell{{}, "P", {}}}};
    CHECK(p.source == src);
    CHECK(p.target == tgt);
  }

  // outer a bare variable: empty path
  {
    InterpPath p = norm_path(m, {"C"}, V(0), {{{"C", "C"}, Pe(V(0), V(1))}});
    CHECK(p.steps.empty());
  }
}

TEST_CASE("interpretation of 2-cells") {
  FreeModel m = model();

  // [[aa_{A,B,X*D}]]: left norm segment empty, right segment one interchange
  {
    Expr2 e = Expr2::gen("aa", {V(0), V(1), Pe(V(2), V(3))});
    InterpPath p = interp_expr2(m, Context(4, "C"), e);
    size_t interchanges = 0, gens = 0;
    for (const auto& s : p.steps) {
      if (std::holds_alternative<RewriteStep>(s))
        ++interchanges;
      else
        ++gens;
    }
    CHECK(gens == 1);
    CHECK(interchanges == 1);
    REQUIRE(p.steps.size() == 2);
    CHECK(std::holds_alternative<GenStep>(p.steps[0]));
    CHECK(std::holds_alternative<RewriteStep>(p.steps[1]));
  }

  // [[Id(P(A,B))]]: empty path with endpoints [[P(A,B)]]
  {
    InterpPath p = interp_expr2(m, {"C", "C"}, Expr2::id(Pe(V(0), V(1))));
    CHECK(p.steps.empty());
    CHECK(p.source == interp_expr1(m, {"C", "C"}, Pe(V(0), V(1))));
  }

  // pentagon sides are parallel with the documented endpoints
  {
    const EqDecl* pent = m.theory.find_equation("pentagon");
    REQUIRE(pent);
    InterpPath l = interp_expr2(m, pent->ctx, pent->lhs);
    InterpPath r = interp_expr2(m, pent->ctx, pent->rhs);
    CHECK(check_parallel(l, r));
    CHECK(l.source == interp_expr1(m, pent->ctx, Pe(V(0), Pe(V(1), Pe(V(2), V(3))))));
    CHECK(l.target == interp_expr1(m, pent->ctx, Pe(Pe(Pe(V(0), V(1)), V(2)), V(3))));
  }

  // all theory equations interpret to parallel paths
  for (const auto& q : model().theory.equations) {
    InterpPath l = interp_expr2(m, q.ctx, q.lhs);
    InterpPath r = interp_expr2(m, q.ctx, q.rhs);
    CHECK(check_parallel(l, r));
  }

  // [[aa]] vs [[ll]] instances have distinct boundaries
  {
    InterpPath a = interp_expr2(m, Context(3, "C"), Expr2::gen("aa", {V(0), V(1), V(2)}));
    InterpPath l = interp_expr2(m, {"C"}, Expr2::gen("ll", {V(0)}));
    CHECK(!check_parallel(a, l));
    CHECK(check_parallel(a, a));
  }
}

TEST_CASE("paths chain and reverse correctly") {
  FreeModel m = model();
  Expr2 e = Expr2::gen("aa", {V(0), V(1), Pe(V(2), V(3))});
  InterpPath p = interp_expr2(m, Context(4, "C"), e);
  for (size_t i = 0; i < p.steps.size(); ++i) {
    CHECK(step_before(p.steps[i]) == (i == 0 ? p.source : step_after(p.steps[i - 1])));
  }
  CHECK(step_after(p.steps.back()) == p.target);

  InterpPath q = path_reversed(p);
  CHECK(q.source == p.target);
  CHECK(q.target == p.source);
  InterpPath round = path_concat(p, q);
  CHECK(round.source == round.target);
}

TEST_CASE("type soundness on random small expressions") {
  FreeModel m = model();
  const Multigraph& mg = m.theory.base;
  std::mt19937_64 rng(5150);

  // random well-formed Expr1 over theory M: grow by replacing a leaf
  auto random_expr1 = [&](size_t max_apps) {
    size_t napps = rng() % (max_apps + 1);
    // structure: generate a shape with n P-nodes; fill vars in order
    std::function<Expr1(size_t&, size_t)> go = [&](size_t& budget, size_t depth) -> Expr1 {
      if (budget == 0 || depth > 4 || (rng() % 3 == 0))
        return V(0); // placeholder, renumbered later
      --budget;
      if (rng() % 6 == 0)
        return Je();
      Expr1 l = go(budget, depth + 1);
      Expr1 r = go(budget, depth + 1);
      return Pe(std::move(l), std::move(r));
    };
    size_t budget = napps;
    Expr1 shape = go(budget, 0);
    // renumber variables left to right
    size_t counter = 0;
    std::function<Expr1(const Expr1&)> renum = [&](const Expr1& x) -> Expr1 {
      if (std::holds_alternative<Var>(x.node))
        return V(counter++);
      const auto& a = std::get<App1>(x.node);
      std::vector<Expr1> args;
      for (const auto& y : a.args)
        args.push_back(renum(y));
      return Expr1::app(a.symbol, std::move(args));
    };
    Expr1 e = renum(shape);
    return std::make_pair(e, Context(counter, "C"));
  };

  for (int iter = 0; iter < 200; ++iter) {
    auto [e, ctx] = random_expr1(4);
    REQUIRE(check_expr1(m.theory, ctx, e) == "C");
    OneCell c = interp_expr1(m, ctx, e);
    CHECK(validate(mg, c, Mode::Plain).empty());
    CHECK(boundary(mg, c).source == interp_ctx(m, ctx));
    CHECK(boundary(mg, c).target == ObjSeq{"C"});
  }

  // random generator instances: boundaries of the path equal the
  // interpretation of the inferred boundaries
  const char* cells[] = {"aa", "ll", "rr", "aa_inv", "ll_inv", "rr_inv"};
  for (int iter = 0; iter < 100; ++iter) {
    const CellDecl* d = m.theory.find_cell(cells[rng() % 6]);
    std::vector<Expr1> args;
    Context ctx;
    for (size_t i = 0; i < d->ctx.size(); ++i) {
      auto [e, ectx] = random_expr1(2);
      args.push_back(shift_vars(e, ctx.size()));
      ctx.insert(ctx.end(), ectx.begin(), ectx.end());
    }
    Expr2 gen = Expr2::gen(d->name, args);
    Boundary2 b = infer_expr2(m.theory, ctx, gen);
    InterpPath p = interp_expr2(m, ctx, gen);
    CHECK(p.source == interp_expr1(m, ctx, b.src));
    CHECK(p.target == interp_expr1(m, ctx, b.tgt));
    CHECK(validate(mg, p.source, Mode::Plain).empty());
    for (const auto& s : p.steps)
      CHECK(validate(mg, step_after(s), Mode::Plain).empty());
  }
}

TEST_CASE("double norm routes are parallel and decided equal") {
  FreeModel m = model();
  const Multigraph& mg = m.theory.base;

  // the documented instance: outer (A*B)*X with a composite in each slot
  DoubleNormInstance inst;
  inst.gamma_ctx = {"C", "C", "C"};
  inst.gamma = Pe(Pe(V(0), V(1)), V(2));
  inst.betas = {{{"C", "C"}, Pe(V(0), V(1))}, {{"C"}, V(0)}, {{}, Je()}};
  inst.alphas = {{{{"C"}, V(0)}, {{"C", "C"}, Pe(V(0), V(1))}}, {{{"C"}, V(0)}}, {}};

  auto [r1, r2] = double_norm_routes(m, inst);
  CHECK(check_parallel(r1, r2));
  for (const auto& s : r1.steps)
    CHECK(std::holds_alternative<RewriteStep>(s));
  for (const auto& s : r2.steps)
    CHECK(std::holds_alternative<RewriteStep>(s));
  auto witness = decide_equal(mg, r1.source, r1.target, Mode::Plain);
  CHECK(witness.has_value());
}
