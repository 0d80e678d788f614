// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/derivation.hpp"

namespace graycal {

std::string rule_name(const EqDerivation& d) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DRefl>) return "refl";
        else if constexpr (std::is_same_v<T, DSym>) return "sym";
        else if constexpr (std::is_same_v<T, DTrans>) return "trans";
        else if constexpr (std::is_same_v<T, DEqAxiom>) return "axiom";
        else if constexpr (std::is_same_v<T, DCompCong>) return "comp-cong";
        else if constexpr (std::is_same_v<T, DAppCong>) return "app-cong";
        else if constexpr (std::is_same_v<T, DFuncId>) return "func-id";
        else if constexpr (std::is_same_v<T, DFuncComp>) return "func-comp";
        else if constexpr (std::is_same_v<T, DUnitL>) return "unit-l";
        else if constexpr (std::is_same_v<T, DUnitR>) return "unit-r";
        else return "nat";
      },
      d.node);
}

namespace {

std::vector<size_t> zeros(size_t n) { return std::vector<size_t>(n, 0); }

struct DerivationChecker {
  const Theory& t;
  const std::vector<EqDecl>& extra;
  std::vector<std::string> path;

  [[noreturn]] void fail(const std::string& msg) {
    std::string at;
    for (const auto& p : path)
      at += "/" + p;
    throw CheckFailure("at " + (at.empty() ? "/" : at) + ": " + msg);
  }

  const EqDecl* find_axiom(const std::string& name) {
    if (const EqDecl* d = t.find_equation(name))
      return d;
    for (const auto& d : extra)
      if (d.name == name)
        return &d;
    return nullptr;
  }

  EqSequent check(const EqDerivation& d) {
    path.push_back(rule_name(d));
    EqSequent s = std::visit([&](const auto& n) { return rule(n); }, d.node);
    path.pop_back();
    return s;
  }

  EqSequent child(const std::vector<EqDerivation>& cs, size_t i) {
    path.push_back(std::to_string(i + 1));
    EqSequent s = check(cs.at(i));
    path.pop_back();
    return s;
  }

  Boundary2 infer(const InCtx<Expr2>& a) {
    try {
      return infer_expr2(t, a.ctx, a.expr);
    } catch (const CheckFailure& e) {
      fail(e.what());
    }
  }

  EqSequent rule(const DRefl& n) {
    Boundary2 b = infer(n.arg);
    return {n.arg.ctx, b.object, b.src, b.tgt, n.arg.expr, n.arg.expr};
  }

  EqSequent rule(const DSym& n) {
    if (n.children.size() != 1)
      fail("sym expects one premise");
    EqSequent s = child(n.children, 0);
    return {s.ctx, s.object, s.src, s.tgt, s.rhs, s.lhs};
  }

  EqSequent rule(const DTrans& n) {
    if (n.children.size() != 2)
      fail("trans expects two premises");
    EqSequent a = child(n.children, 0); // psi = chi
    EqSequent b = child(n.children, 1); // phi = psi
    if (a.ctx != b.ctx)
      fail("trans premises have different contexts");
    if (a.object != b.object || !(a.src == b.src) || !(a.tgt == b.tgt))
      fail("trans premises are not parallel");
    if (!expr2_equal(b.rhs, a.lhs))
      fail("trans premises do not share the middle term: " +
           print_expr2(b.rhs, default_names(b.ctx.size())) + " vs " +
           print_expr2(a.lhs, default_names(a.ctx.size())));
    return {a.ctx, a.object, a.src, a.tgt, b.lhs, a.rhs};
  }

  EqSequent rule(const DEqAxiom& n) {
    const EqDecl* d = find_axiom(n.name);
    if (!d)
      fail("unknown equation " + n.name);
    if (n.args.size() != d->ctx.size())
      fail(n.name + " expects " + std::to_string(d->ctx.size()) + " instantiating expressions");
    Context ctx;
    std::vector<Expr1> gammas;
    std::vector<size_t> vc;
    for (size_t i = 0; i < n.args.size(); ++i) {
      std::string obj;
      try {
        obj = check_expr1(t, n.args[i].ctx, n.args[i].expr);
      } catch (const CheckFailure& e) {
        fail(e.what());
      }
      if (obj != d->ctx[i])
        fail("instantiation " + std::to_string(i + 1) + " of " + n.name + " has object " +
             obj + ", expected " + d->ctx[i]);
      ctx.insert(ctx.end(), n.args[i].ctx.begin(), n.args[i].ctx.end());
      gammas.push_back(n.args[i].expr);
      vc.push_back(n.args[i].ctx.size());
    }
    return {ctx,
            d->object,
            subst_1in1(d->src, gammas, vc),
            subst_1in1(d->tgt, gammas, vc),
            subst_1in2(d->lhs, gammas, vc),
            subst_1in2(d->rhs, gammas, vc)};
  }

  EqSequent rule(const DCompCong& n) {
    if (n.children.size() != 2)
      fail("comp-cong expects two premises");
    EqSequent a = child(n.children, 0); // phi = phi' : beta -> gamma
    EqSequent b = child(n.children, 1); // psi = psi' : alpha -> beta
    if (a.ctx != b.ctx)
      fail("comp-cong premises have different contexts");
    if (a.object != b.object)
      fail("comp-cong premises have different objects");
    if (!(b.tgt == a.src))
      fail("comp-cong boundary mismatch");
    return {a.ctx,          a.object,
            b.src,          a.tgt,
            Expr2::comp(a.lhs, b.lhs), Expr2::comp(a.rhs, b.rhs)};
  }

  EqSequent rule(const DAppCong& n) {
    const ArrowSig* f = t.base.find_arrow(n.symbol);
    if (!f)
      fail("unknown 1-cell symbol " + n.symbol);
    if (n.children.size() != f->inputs.size())
      fail(n.symbol + " expects " + std::to_string(f->inputs.size()) + " premises");
    Context ctx;
    std::vector<Expr1> srcs, tgts;
    std::vector<Expr2> ls, rs;
    for (size_t i = 0; i < n.children.size(); ++i) {
      EqSequent s = child(n.children, i);
      if (s.object != f->inputs[i])
        fail("premise " + std::to_string(i + 1) + " has object " + s.object + ", expected " +
             f->inputs[i]);
      size_t off = ctx.size();
      ctx.insert(ctx.end(), s.ctx.begin(), s.ctx.end());
      srcs.push_back(shift_vars(s.src, off));
      tgts.push_back(shift_vars(s.tgt, off));
      ls.push_back(shift_vars(s.lhs, off));
      rs.push_back(shift_vars(s.rhs, off));
    }
    return {ctx,
            f->output,
            Expr1::app(n.symbol, std::move(srcs)),
            Expr1::app(n.symbol, std::move(tgts)),
            Expr2::app(n.symbol, std::move(ls)),
            Expr2::app(n.symbol, std::move(rs))};
  }

  EqSequent rule(const DFuncId& n) {
    const ArrowSig* f = t.base.find_arrow(n.symbol);
    if (!f)
      fail("unknown 1-cell symbol " + n.symbol);
    if (n.args.size() != f->inputs.size())
      fail(n.symbol + " expects " + std::to_string(f->inputs.size()) + " arguments");
    Context ctx;
    std::vector<Expr1> alphas;
    std::vector<Expr2> ids;
    for (size_t i = 0; i < n.args.size(); ++i) {
      std::string obj;
      try {
        obj = check_expr1(t, n.args[i].ctx, n.args[i].expr);
      } catch (const CheckFailure& e) {
        fail(e.what());
      }
      if (obj != f->inputs[i])
        fail("argument " + std::to_string(i + 1) + " has object " + obj + ", expected " +
             f->inputs[i]);
      Expr1 shifted = shift_vars(n.args[i].expr, ctx.size());
      ctx.insert(ctx.end(), n.args[i].ctx.begin(), n.args[i].ctx.end());
      ids.push_back(Expr2::id(shifted));
      alphas.push_back(std::move(shifted));
    }
    Expr1 body = Expr1::app(n.symbol, alphas);
    return {ctx, f->output, body, body, Expr2::app(n.symbol, std::move(ids)),
            Expr2::id(body)};
  }

  EqSequent rule(const DFuncComp& n) {
    const ArrowSig* f = t.base.find_arrow(n.symbol);
    if (!f)
      fail("unknown 1-cell symbol " + n.symbol);
    if (n.phis.size() != f->inputs.size() || n.psis.size() != f->inputs.size())
      fail(n.symbol + " expects " + std::to_string(f->inputs.size()) +
           " upper and lower arguments");
    Context ctx;
    std::vector<Expr1> srcs, tgts;
    std::vector<Expr2> phis, psis, comps;
    for (size_t i = 0; i < n.phis.size(); ++i) {
      if (n.phis[i].ctx != n.psis[i].ctx)
        fail("argument " + std::to_string(i + 1) + " pairs different contexts");
      Boundary2 bp = infer(n.phis[i]);
      Boundary2 bq = infer(n.psis[i]);
      if (bp.object != f->inputs[i])
        fail("argument " + std::to_string(i + 1) + " has object " + bp.object +
             ", expected " + f->inputs[i]);
      if (!(bq.tgt == bp.src))
        fail("argument " + std::to_string(i + 1) + " does not compose");
      size_t off = ctx.size();
      ctx.insert(ctx.end(), n.phis[i].ctx.begin(), n.phis[i].ctx.end());
      Expr2 phi = shift_vars(n.phis[i].expr, off);
      Expr2 psi = shift_vars(n.psis[i].expr, off);
      srcs.push_back(shift_vars(bq.src, off));
      tgts.push_back(shift_vars(bp.tgt, off));
      comps.push_back(Expr2::comp(phi, psi));
      phis.push_back(std::move(phi));
      psis.push_back(std::move(psi));
    }
    return {ctx,
            f->output,
            Expr1::app(n.symbol, std::move(srcs)),
            Expr1::app(n.symbol, std::move(tgts)),
            Expr2::comp(Expr2::app(n.symbol, std::move(phis)),
                        Expr2::app(n.symbol, std::move(psis))),
            Expr2::app(n.symbol, std::move(comps))};
  }

  EqSequent rule(const DUnitL& n) {
    Boundary2 b = infer(n.arg);
    return {n.arg.ctx, b.object, b.src, b.tgt,
            Expr2::comp(Expr2::id(b.tgt), n.arg.expr), n.arg.expr};
  }

  EqSequent rule(const DUnitR& n) {
    Boundary2 b = infer(n.arg);
    return {n.arg.ctx, b.object, b.src, b.tgt,
            Expr2::comp(n.arg.expr, Expr2::id(b.src)), n.arg.expr};
  }

  EqSequent rule(const DNat& n) {
    const CellDecl* d = t.find_cell(n.cell);
    if (!d)
      fail("unknown 2-cell symbol " + n.cell);
    if (n.args.size() != d->ctx.size())
      fail(n.cell + " expects " + std::to_string(d->ctx.size()) + " argument 2-cells");
    Context ctx;
    std::vector<Expr2> phis;
    std::vector<Expr1> gammas, deltas;
    for (size_t i = 0; i < n.args.size(); ++i) {
      Boundary2 b = infer(n.args[i]);
      if (b.object != d->ctx[i])
        fail("argument " + std::to_string(i + 1) + " has object " + b.object + ", expected " +
             d->ctx[i]);
      size_t off = ctx.size();
      ctx.insert(ctx.end(), n.args[i].ctx.begin(), n.args[i].ctx.end());
      phis.push_back(shift_vars(n.args[i].expr, off));
      gammas.push_back(shift_vars(b.src, off));
      deltas.push_back(shift_vars(b.tgt, off));
    }
    std::vector<size_t> z = zeros(phis.size());
    // beta[A := phi] . t_gamma  =  t_delta . alpha[A := phi]
    return {ctx,
            d->object,
            subst_1in1(d->lhs, gammas, z),
            subst_1in1(d->rhs, deltas, z),
            Expr2::comp(subst_2in1(d->rhs, phis, z), Expr2::gen(n.cell, gammas)),
            Expr2::comp(Expr2::gen(n.cell, deltas), subst_2in1(d->lhs, phis, z))};
  }
};

} // namespace

EqSequent check_eq_derivation(const Theory& t, const std::vector<EqDecl>& extra,
                              const EqDerivation& d) {
  DerivationChecker c{t, extra, {}};
  return c.check(d);
}

ScriptReport check_script(const Theory& t, const ProofScript& s) {
  ScriptReport rep;
  std::vector<EqDecl> proved;
  for (const Lemma& lm : s.lemmas) {
    LemmaResult res{lm.name, false, ""};
    try {
      if (t.find_equation(lm.name))
        throw CheckFailure("lemma name collides with a theory equation");
      for (const auto& p : proved)
        if (p.name == lm.name)
          throw CheckFailure("duplicate lemma name");
      Boundary2 bl = infer_expr2(t, lm.ctx, lm.lhs);
      Boundary2 br = infer_expr2(t, lm.ctx, lm.rhs);
      if (bl.object != br.object || !(bl.src == br.src) || !(bl.tgt == br.tgt))
        throw CheckFailure("goal sides are not parallel");
      DerivationChecker c{t, proved, {}};
      EqSequent seq = c.check(lm.proof);
      auto names = default_names(lm.ctx.size());
      if (seq.ctx != lm.ctx)
        throw CheckFailure("derived context does not match the goal");
      if (seq.object != bl.object || !(seq.src == bl.src) || !(seq.tgt == bl.tgt))
        throw CheckFailure("derived boundary does not match the goal");
      if (!expr2_equal(seq.lhs, lm.lhs))
        throw CheckFailure("derived left side " + print_expr2(seq.lhs, names) +
                           " does not match the goal " + print_expr2(lm.lhs, names));
      if (!expr2_equal(seq.rhs, lm.rhs))
        throw CheckFailure("derived right side " + print_expr2(seq.rhs, names) +
                           " does not match the goal " + print_expr2(lm.rhs, names));
      proved.push_back(EqDecl{lm.name, lm.ctx, bl.object, bl.src, bl.tgt, lm.lhs, lm.rhs});
      res.passed = true;
    } catch (const CheckFailure& e) {
      res.message = e.what();
    }
    rep.lemmas.push_back(std::move(res));
  }
  return rep;
}

} // namespace graycal
