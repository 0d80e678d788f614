// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/check.hpp"

namespace graycal {

namespace {

// Threads the next-expected variable index through a whole expression, which
// enforces linearity and left-to-right order globally.
struct Checker {
  const Theory& t;
  const Context& ctx;
  size_t next = 0;

  [[noreturn]] void fail(const std::string& msg) { throw CheckFailure(msg); }

  std::string check1(const Expr1& e) {
    if (const auto* v = std::get_if<Var>(&e.node)) {
      if (v->index >= ctx.size())
        fail("variable index " + std::to_string(v->index) + " out of range");
      if (v->index != next)
        fail("variable " + std::to_string(v->index) +
             (v->index < next ? " reused or out of order" : " skips position " +
                                                                std::to_string(next)));
      ++next;
      return ctx[v->index];
    }
    const auto& a = std::get<App1>(e.node);
    const ArrowSig* f = t.base.find_arrow(a.symbol);
    if (!f)
      fail("unknown 1-cell symbol " + a.symbol);
    if (a.args.size() != f->inputs.size())
      fail(a.symbol + " expects " + std::to_string(f->inputs.size()) + " arguments, got " +
           std::to_string(a.args.size()));
    for (size_t i = 0; i < a.args.size(); ++i) {
      std::string obj = check1(a.args[i]);
      if (obj != f->inputs[i])
        fail("argument " + std::to_string(i + 1) + " of " + a.symbol + " has object " + obj +
             ", expected " + f->inputs[i]);
    }
    return f->output;
  }

  Boundary2 check2(const Expr2& e) {
    if (const auto* i = std::get_if<Id2>(&e.node)) {
      std::string obj = check1(i->body);
      return {i->body, i->body, obj};
    }
    if (const auto* g = std::get_if<Gen2>(&e.node)) {
      const CellDecl* d = t.find_cell(g->cell);
      if (!d)
        fail("unknown 2-cell symbol " + g->cell);
      if (g->args.size() != d->ctx.size())
        fail(g->cell + " expects " + std::to_string(d->ctx.size()) + " arguments, got " +
             std::to_string(g->args.size()));
      for (size_t i = 0; i < g->args.size(); ++i) {
        std::string obj = check1(g->args[i]);
        if (obj != d->ctx[i])
          fail("argument " + std::to_string(i + 1) + " of " + g->cell + " has object " + obj +
               ", expected " + d->ctx[i]);
      }
      return {plug_1in1(d->lhs, g->args), plug_1in1(d->rhs, g->args), d->object};
    }
    if (const auto* c = std::get_if<Comp2>(&e.node)) {
      size_t base = next;
      Boundary2 snd = check2(c->parts[1]);
      size_t end = next;
      next = base;
      Boundary2 fst = check2(c->parts[0]);
      if (next != end)
        fail("composite sides use different contexts");
      if (fst.object != snd.object)
        fail("composite sides have different objects");
      if (!(snd.tgt == fst.src))
        fail("composite boundary mismatch: " + print_expr1(snd.tgt, default_names(next)) +
             " then " + print_expr1(fst.src, default_names(next)));
      return {snd.src, fst.tgt, fst.object};
    }
    const auto& a = std::get<App2>(e.node);
    const ArrowSig* f = t.base.find_arrow(a.symbol);
    if (!f)
      fail("unknown 1-cell symbol " + a.symbol);
    if (a.args.size() != f->inputs.size())
      fail(a.symbol + " expects " + std::to_string(f->inputs.size()) + " arguments, got " +
           std::to_string(a.args.size()));
    std::vector<Expr1> srcs, tgts;
    for (size_t i = 0; i < a.args.size(); ++i) {
      Boundary2 b = check2(a.args[i]);
      if (b.object != f->inputs[i])
        fail("argument " + std::to_string(i + 1) + " of " + a.symbol + " has object " +
             b.object + ", expected " + f->inputs[i]);
      srcs.push_back(std::move(b.src));
      tgts.push_back(std::move(b.tgt));
    }
    return {Expr1::app(a.symbol, std::move(srcs)), Expr1::app(a.symbol, std::move(tgts)),
            f->output};
  }

  // Plugs arguments verbatim: they already carry this checker's context
  // indices, while beta's variables index the argument list.
  static Expr1 plug_1in1(const Expr1& beta, const std::vector<Expr1>& args) {
    if (const auto* v = std::get_if<Var>(&beta.node))
      return args.at(v->index);
    const auto& a = std::get<App1>(beta.node);
    std::vector<Expr1> xs;
    xs.reserve(a.args.size());
    for (const auto& x : a.args)
      xs.push_back(plug_1in1(x, args));
    return Expr1::app(a.symbol, std::move(xs));
  }
};

} // namespace

std::string check_expr1(const Theory& t, const Context& ctx, const Expr1& e) {
  Checker c{t, ctx};
  std::string obj = c.check1(e);
  if (c.next != ctx.size())
    throw CheckFailure("expression uses " + std::to_string(c.next) + " of " +
                       std::to_string(ctx.size()) + " context entries");
  return obj;
}

Boundary2 infer_expr2(const Theory& t, const Context& ctx, const Expr2& e) {
  Checker c{t, ctx};
  Boundary2 b = c.check2(e);
  if (c.next != ctx.size())
    throw CheckFailure("expression uses " + std::to_string(c.next) + " of " +
                       std::to_string(ctx.size()) + " context entries");
  return b;
}

std::vector<size_t> var_counts(const std::vector<Expr1>& es) {
  std::vector<size_t> out;
  out.reserve(es.size());
  for (const auto& e : es)
    out.push_back(var_count(e));
  return out;
}

std::vector<size_t> var_counts2(const std::vector<Expr2>& es) {
  std::vector<size_t> out;
  out.reserve(es.size());
  for (const auto& e : es)
    out.push_back(var_count(e));
  return out;
}

namespace {

std::vector<size_t> offsets_of(const std::vector<size_t>& counts) {
  std::vector<size_t> off(counts.size(), 0);
  for (size_t i = 1; i < counts.size(); ++i)
    off[i] = off[i - 1] + counts[i - 1];
  return off;
}

} // namespace

Expr1 subst_1in1(const Expr1& beta, const std::vector<Expr1>& args,
                 const std::vector<size_t>& vc) {
  std::vector<size_t> off = offsets_of(vc);
  if (const auto* v = std::get_if<Var>(&beta.node))
    return shift_vars(args.at(v->index), off.at(v->index));
  const auto& a = std::get<App1>(beta.node);
  std::vector<Expr1> xs;
  xs.reserve(a.args.size());
  for (const auto& x : a.args)
    xs.push_back(subst_1in1(x, args, vc));
  return Expr1::app(a.symbol, std::move(xs));
}

Expr2 subst_1in2(const Expr2& phi, const std::vector<Expr1>& args,
                 const std::vector<size_t>& vc) {
  return std::visit(
      [&](const auto& n) -> Expr2 {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return Expr2::id(subst_1in1(n.body, args, vc));
        } else if constexpr (std::is_same_v<T, Gen2>) {
          std::vector<Expr1> xs;
          for (const auto& x : n.args)
            xs.push_back(subst_1in1(x, args, vc));
          return Expr2::gen(n.cell, std::move(xs));
        } else if constexpr (std::is_same_v<T, Comp2>) {
          return Expr2::comp(subst_1in2(n.parts[0], args, vc),
                             subst_1in2(n.parts[1], args, vc));
        } else {
          std::vector<Expr2> xs;
          for (const auto& x : n.args)
            xs.push_back(subst_1in2(x, args, vc));
          return Expr2::app(n.symbol, std::move(xs));
        }
      },
      phi.node);
}

Expr2 subst_2in1(const Expr1& gamma, const std::vector<Expr2>& args,
                 const std::vector<size_t>& vc) {
  std::vector<size_t> off = offsets_of(vc);
  if (const auto* v = std::get_if<Var>(&gamma.node))
    return shift_vars(args.at(v->index), off.at(v->index));
  const auto& a = std::get<App1>(gamma.node);
  std::vector<Expr2> xs;
  xs.reserve(a.args.size());
  for (const auto& x : a.args)
    xs.push_back(subst_2in1(x, args, vc));
  return Expr2::app(a.symbol, std::move(xs));
}

} // namespace graycal
