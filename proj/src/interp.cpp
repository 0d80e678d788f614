// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/interp.hpp"

#include "graycal/term_text.hpp"

#include <cassert>
#include <sstream>

namespace graycal {

FreeModel free_model(const Theory& t) {
  Diagnostics ds = validate_theory(t);
  if (!ds.empty())
    throw GrayError("free_model: invalid theory\n" + render_diagnostics(ds));
  return FreeModel{t};
}

const OneCell& step_before(const PathStep& s) {
  if (const auto* r = std::get_if<RewriteStep>(&s))
    return r->before;
  return std::get<GenStep>(s).before;
}

const OneCell& step_after(const PathStep& s) {
  if (const auto* r = std::get_if<RewriteStep>(&s))
    return r->after;
  return std::get<GenStep>(s).after;
}

InterpPath path_concat(const InterpPath& a, const InterpPath& b) {
  if (!(a.target == b.source))
    throw GrayError("path_concat: endpoints do not chain");
  InterpPath out{a.source, a.steps, b.target};
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

InterpPath path_reversed(const InterpPath& p) {
  InterpPath out{p.target, {}, p.source};
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    if (const auto* r = std::get_if<RewriteStep>(&*it)) {
      out.steps.push_back(reversed(*r));
    } else {
      GenStep g = std::get<GenStep>(*it);
      std::swap(g.before, g.after);
      g.inverse = !g.inverse;
      out.steps.push_back(std::move(g));
    }
  }
  return out;
}

InterpPath embed_path(const Multigraph& mg, const InterpPath& p, const OneCell& left,
                      const OneCell& right, const ObjSeq& pre, const ObjSeq& suf) {
  auto place = [&](const OneCell& x) {
    OneCell y = whisker(pre, x, suf);
    OneCell z = left.cells.empty() ? std::move(y) : compose(mg, left, y);
    return right.cells.empty() ? std::move(z) : compose(mg, z, right);
  };
  InterpPath out{place(p.source), {}, place(p.target)};
  for (const PathStep& s : p.steps) {
    if (const auto* r = std::get_if<RewriteStep>(&s)) {
      RewriteStep t = *r;
      t.redex.index += left.cells.size();
      t.before = place(r->before);
      t.after = place(r->after);
      out.steps.push_back(std::move(t));
    } else {
      GenStep g = std::get<GenStep>(s);
      g.prefix = concat(pre, g.prefix);
      g.suffix = concat(g.suffix, suf);
      g.before = place(g.before);
      g.after = place(g.after);
      out.steps.push_back(std::move(g));
    }
  }
  return out;
}

ObjSeq interp_ctx(const FreeModel& m, const Context& ctx) {
  (void)m;
  return ctx;
}

namespace {

// localise an expression whose variables start at some ambient offset
Expr1 shift_down(const Expr1& e, size_t delta) {
  if (const auto* v = std::get_if<Var>(&e.node))
    return Expr1::var(v->index - delta);
  const auto& a = std::get<App1>(e.node);
  std::vector<Expr1> args;
  args.reserve(a.args.size());
  for (const auto& x : a.args)
    args.push_back(shift_down(x, delta));
  return Expr1::app(a.symbol, std::move(args));
}

} // namespace

OneCell interp_expr1(const FreeModel& m, const Context& ctx, const Expr1& e) {
  if (const auto* v = std::get_if<Var>(&e.node))
    return OneCell::identity({ctx.at(v->index)});
  const auto& a = std::get<App1>(e.node);
  const ArrowSig& f = m.theory.base.arrow(a.symbol);
  std::vector<OneCell> parts;
  parts.reserve(a.args.size());
  size_t off = 0;
  for (const auto& x : a.args) {
    // checked arguments carry ambient indices in ascending blocks
    size_t k = var_count(x);
    Context sub(ctx.begin() + static_cast<std::ptrdiff_t>(off),
                ctx.begin() + static_cast<std::ptrdiff_t>(off + k));
    parts.push_back(interp_expr1(m, sub, shift_down(x, off)));
    off += k;
  }
  OneCell args = tensor_all(m.theory.base, parts);
  OneCell gen{f.inputs, {MultiarrowCell{{}, f.name, {}}}};
  return compose(m.theory.base, args, gen);
}

OneCell tensor_all(const Multigraph& mg, const std::vector<OneCell>& fs) {
  OneCell acc = OneCell::identity({});
  for (const auto& f : fs)
    acc = tensor(mg, acc, f);
  return acc;
}

namespace {

Expr2 shift_down2(const Expr2& e, size_t delta) {
  return std::visit(
      [&](const auto& n) -> Expr2 {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return Expr2::id(shift_down(n.body, delta));
        } else if constexpr (std::is_same_v<T, Gen2>) {
          std::vector<Expr1> args;
          for (const auto& a : n.args)
            args.push_back(shift_down(a, delta));
          return Expr2::gen(n.cell, std::move(args));
        } else if constexpr (std::is_same_v<T, Comp2>) {
          return Expr2::comp(shift_down2(n.parts[0], delta), shift_down2(n.parts[1], delta));
        } else {
          std::vector<Expr2> args;
          for (const auto& a : n.args)
            args.push_back(shift_down2(a, delta));
          return Expr2::app(n.symbol, std::move(args));
        }
      },
      e.node);
}

size_t first_var(const Expr1& e) {
  if (const auto* v = std::get_if<Var>(&e.node))
    return v->index;
  const auto& a = std::get<App1>(e.node);
  for (const auto& x : a.args) {
    if (var_count(x) > 0)
      return first_var(x);
  }
  return 0;
}

size_t first_var2(const Expr2& e) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return first_var(n.body);
        } else if constexpr (std::is_same_v<T, Gen2>) {
          for (const auto& a : n.args)
            if (var_count(a) > 0)
              return first_var(a);
          return 0;
        } else if constexpr (std::is_same_v<T, Comp2>) {
          return first_var2(n.parts[0]);
        } else {
          for (const auto& a : n.args)
            if (var_count(a) > 0)
              return first_var2(a);
          return 0;
        }
      },
      e.node);
}

// localised (context, expression) pair for an argument using the ambient
// variable block starting at its first variable
std::pair<Context, Expr1> localize1(const Context& ctx, const Expr1& e) {
  size_t k = var_count(e);
  if (k == 0)
    return {{}, e};
  size_t off = first_var(e);
  Context sub(ctx.begin() + static_cast<std::ptrdiff_t>(off),
              ctx.begin() + static_cast<std::ptrdiff_t>(off + k));
  return {sub, shift_down(e, off)};
}

std::pair<Context, Expr2> localize2(const Context& ctx, const Expr2& e) {
  size_t k = var_count(e);
  if (k == 0)
    return {{}, e};
  size_t off = first_var2(e);
  Context sub(ctx.begin() + static_cast<std::ptrdiff_t>(off),
              ctx.begin() + static_cast<std::ptrdiff_t>(off + k));
  return {sub, shift_down2(e, off)};
}

} // namespace

InterpPath ic_path(const FreeModel& m, const std::vector<std::pair<OneCell, OneCell>>& comps) {
  const Multigraph& mg = m.theory.base;
  std::vector<OneCell> gs, fs, gfs;
  for (const auto& [g, f] : comps) {
    gs.push_back(g);
    fs.push_back(f);
    gfs.push_back(compose(mg, g, f));
  }
  OneCell start = compose(mg, tensor_all(mg, gs), tensor_all(mg, fs));
  OneCell goal = tensor_all(mg, gfs);

  // tags mirror the cell sequence: (component, 1 for an f-cell, index)
  struct Tag {
    size_t comp;
    int part;
    size_t idx;
  };
  std::vector<Tag> tags;
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t k = 0; k < gs[i].cells.size(); ++k)
      tags.push_back({i, 0, k});
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t k = 0; k < fs[i].cells.size(); ++k)
      tags.push_back({i, 1, k});

  auto before = [](const Tag& a, const Tag& b) {
    return std::tie(a.comp, a.part, a.idx) < std::tie(b.comp, b.part, b.idx);
  };

  InterpPath path = InterpPath::identity(start);
  OneCell cur = start;
  // insertion sort with adjacent negative interchanges; each f block drifts
  // left past the g blocks of later components
  for (size_t i = 1; i < tags.size(); ++i) {
    size_t p = i;
    while (p > 0 && before(tags[p], tags[p - 1])) {
      auto [next, step] = apply_inverse_interchange(mg, cur, p - 1);
      path.steps.push_back(step);
      cur = std::move(next);
      std::swap(tags[p], tags[p - 1]);
      --p;
    }
  }
  path.target = cur;
  if (!(cur == goal))
    throw GrayError("ic_path: did not reach the tensor of composites");
  return path;
}

InterpPath norm_path(const FreeModel& m, const Context& outer_ctx, const Expr1& outer,
                     const std::vector<std::pair<Context, Expr1>>& inners) {
  const Multigraph& mg = m.theory.base;
  if (std::holds_alternative<Var>(outer.node)) {
    if (inners.size() != 1)
      throw GrayError("norm_path: a variable takes exactly one inner");
    return InterpPath::identity(interp_expr1(m, inners[0].first, inners[0].second));
  }
  const auto& app = std::get<App1>(outer.node);
  const ArrowSig& f = m.theory.base.arrow(app.symbol);
  (void)outer_ctx;

  // partition the inners by the outer arguments' variable counts
  struct Comp {
    Context ctx;                                  // slice of the outer context
    Expr1 beta;                                   // localised outer argument
    std::vector<std::pair<Context, Expr1>> alphas; // its inners
    OneCell g, fcell;                             // interpreted tensor of alphas, beta
    Expr1 substituted;                            // beta[vars := alphas]
    OneCell normed;                               // interp of substituted
  };
  std::vector<Comp> comps;
  size_t v = 0, a = 0;
  for (const auto& arg : app.args) {
    Comp c;
    size_t k = var_count(arg);
    c.ctx = Context(outer_ctx.begin() + static_cast<std::ptrdiff_t>(v),
                    outer_ctx.begin() + static_cast<std::ptrdiff_t>(v + k));
    c.beta = shift_down(arg, v);
    std::vector<Expr1> alpha_exprs;
    std::vector<size_t> alpha_vc;
    std::vector<OneCell> alpha_cells;
    for (size_t j = 0; j < k; ++j) {
      c.alphas.push_back(inners.at(a + j));
      alpha_exprs.push_back(inners[a + j].second);
      alpha_vc.push_back(inners[a + j].first.size());
      alpha_cells.push_back(interp_expr1(m, inners[a + j].first, inners[a + j].second));
    }
    c.g = tensor_all(mg, alpha_cells);
    c.fcell = interp_expr1(m, c.ctx, c.beta);
    c.substituted = subst_1in1(c.beta, alpha_exprs, alpha_vc);
    Context subst_ctx;
    for (const auto& [ictx, _] : c.alphas)
      subst_ctx.insert(subst_ctx.end(), ictx.begin(), ictx.end());
    c.normed = interp_expr1(m, subst_ctx, c.substituted);
    comps.push_back(std::move(c));
    v += k;
    a += k;
  }
  if (a != inners.size())
    throw GrayError("norm_path: inner count does not match the outer context");

  std::vector<std::pair<OneCell, OneCell>> pairs;
  for (const auto& c : comps)
    pairs.push_back({c.g, c.fcell});
  OneCell gen{f.inputs, {MultiarrowCell{{}, f.name, {}}}};
  OneCell empty = OneCell::identity({});

  InterpPath path = embed_path(mg, ic_path(m, pairs), empty, gen, {}, {});

  // left-to-right recursive norms
  for (size_t i = 0; i < comps.size(); ++i) {
    InterpPath rec = norm_path(m, comps[i].ctx, comps[i].beta, comps[i].alphas);
    ObjSeq pre, suf;
    std::vector<OneCell> left_parts;
    for (size_t j = 0; j < i; ++j) {
      pre.push_back(f.inputs[j]);
      left_parts.push_back(comps[j].normed);
    }
    std::vector<OneCell> right_parts;
    for (size_t j = i + 1; j < comps.size(); ++j) {
      Boundary bj = boundary(mg, comps[j].g);
      suf.insert(suf.end(), bj.source.begin(), bj.source.end());
      right_parts.push_back(compose(mg, comps[j].g, comps[j].fcell));
    }
    OneCell left = whisker({}, tensor_all(mg, left_parts), concat(boundary(mg, rec.source).source, suf));
    ObjSeq mid_tgt = pre;
    mid_tgt.push_back(f.inputs[i]);
    OneCell right = compose(mg, whisker(mid_tgt, tensor_all(mg, right_parts), {}), gen);
    path = path_concat(path, embed_path(mg, rec, left, right, pre, suf));
  }
  return path;
}

InterpPath interp_expr2(const FreeModel& m, const Context& ctx, const Expr2& e) {
  const Multigraph& mg = m.theory.base;
  return std::visit(
      [&](const auto& n) -> InterpPath {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return InterpPath::identity(interp_expr1(m, ctx, n.body));
        } else if constexpr (std::is_same_v<T, Comp2>) {
          InterpPath second = interp_expr2(m, ctx, n.parts[1]);
          InterpPath first = interp_expr2(m, ctx, n.parts[0]);
          return path_concat(second, first);
        } else if constexpr (std::is_same_v<T, Gen2>) {
          const CellDecl* d = m.theory.find_cell(n.cell);
          if (!d)
            throw GrayError("interp: unknown 2-cell symbol " + n.cell);
          std::vector<std::pair<Context, Expr1>> locals;
          std::vector<OneCell> arg_cells;
          for (const auto& g : n.args) {
            locals.push_back(localize1(ctx, g));
            arg_cells.push_back(interp_expr1(m, locals.back().first, locals.back().second));
          }
          InterpPath norm_src = norm_path(m, d->ctx, d->lhs, locals);
          InterpPath norm_tgt = norm_path(m, d->ctx, d->rhs, locals);
          OneCell lhs_cell = interp_expr1(m, d->ctx, d->lhs);
          OneCell rhs_cell = interp_expr1(m, d->ctx, d->rhs);
          OneCell args = tensor_all(mg, arg_cells);
          GenStep gs{{},       n.cell, arg_cells, {}, false,
                     compose(mg, args, lhs_cell), compose(mg, args, rhs_cell)};
          InterpPath mid{gs.before, {PathStep{gs}}, gs.after};
          return path_concat(path_concat(path_reversed(norm_src), mid), norm_tgt);
        } else {
          const ArrowSig& f = m.theory.base.arrow(n.symbol);
          std::vector<std::pair<Context, Expr2>> locals;
          std::vector<Boundary2> bounds;
          for (const auto& x : n.args) {
            locals.push_back(localize2(ctx, x));
            bounds.push_back(infer_expr2(m.theory, locals.back().first, locals.back().second));
          }
          OneCell gen{f.inputs, {MultiarrowCell{{}, f.name, {}}}};
          OneCell empty = OneCell::identity({});
          std::vector<OneCell> src_cells, tgt_cells;
          for (size_t i = 0; i < locals.size(); ++i) {
            src_cells.push_back(interp_expr1(m, locals[i].first, bounds[i].src));
            tgt_cells.push_back(interp_expr1(m, locals[i].first, bounds[i].tgt));
          }
          InterpPath path = InterpPath::identity(
              compose(mg, tensor_all(mg, src_cells), gen));
          for (size_t i = 0; i < locals.size(); ++i) {
            InterpPath pi = interp_expr2(m, locals[i].first, locals[i].second);
            ObjSeq pre, suf;
            std::vector<OneCell> left_parts, right_parts;
            for (size_t j = 0; j < i; ++j) {
              pre.push_back(f.inputs[j]);
              left_parts.push_back(tgt_cells[j]);
            }
            for (size_t j = i + 1; j < locals.size(); ++j) {
              Boundary bj = boundary(mg, src_cells[j]);
              suf.insert(suf.end(), bj.source.begin(), bj.source.end());
              right_parts.push_back(src_cells[j]);
            }
            OneCell left = whisker({}, tensor_all(mg, left_parts),
                                   concat(boundary(mg, pi.source).source, suf));
            ObjSeq mid_tgt = pre;
            mid_tgt.push_back(f.inputs[i]);
            OneCell right = compose(mg, whisker(mid_tgt, tensor_all(mg, right_parts), {}), gen);
            path = path_concat(path, embed_path(mg, pi, left, right, pre, suf));
          }
          return path;
        }
      },
      e.node);
}

bool check_parallel(const InterpPath& p, const InterpPath& q) {
  return p.source == q.source && p.target == q.target;
}

std::pair<InterpPath, InterpPath> double_norm_routes(const FreeModel& m,
                                                     const DoubleNormInstance& inst) {
  const Multigraph& mg = m.theory.base;
  size_t n = inst.gamma_ctx.size();
  if (inst.betas.size() != n || inst.alphas.size() != n)
    throw GrayError("double_norm_routes: layer sizes do not match");

  std::vector<OneCell> beta_cells, g_cells, raw, normed;
  std::vector<std::pair<Context, Expr1>> substituted; // beta_i[alpha_i]
  std::vector<std::pair<Context, Expr1>> flat_alphas;
  for (size_t i = 0; i < n; ++i) {
    const auto& [bctx, beta] = inst.betas[i];
    if (inst.alphas[i].size() != bctx.size())
      throw GrayError("double_norm_routes: alpha layer does not match beta context");
    beta_cells.push_back(interp_expr1(m, bctx, beta));
    std::vector<OneCell> acells;
    std::vector<Expr1> aexprs;
    std::vector<size_t> avc;
    Context actx;
    for (const auto& [ictx, alpha] : inst.alphas[i]) {
      acells.push_back(interp_expr1(m, ictx, alpha));
      aexprs.push_back(alpha);
      avc.push_back(ictx.size());
      actx.insert(actx.end(), ictx.begin(), ictx.end());
      flat_alphas.push_back({ictx, alpha});
    }
    g_cells.push_back(tensor_all(mg, acells));
    raw.push_back(compose(mg, g_cells.back(), beta_cells.back()));
    substituted.push_back({actx, subst_1in1(beta, aexprs, avc)});
    normed.push_back(interp_expr1(m, actx, substituted.back().second));
  }
  OneCell gamma_cell = interp_expr1(m, inst.gamma_ctx, inst.gamma);
  OneCell all_alphas = tensor_all(mg, g_cells);
  OneCell no_cells = OneCell::identity({});

  // route 1: norm the outer pair over the alphas, then norm the whole
  std::vector<Expr1> bexprs;
  std::vector<size_t> bvc;
  Context bctx_all;
  for (const auto& [bctx, beta] : inst.betas) {
    bexprs.push_back(beta);
    bvc.push_back(bctx.size());
    bctx_all.insert(bctx_all.end(), bctx.begin(), bctx.end());
  }
  InterpPath r1 = embed_path(mg, norm_path(m, inst.gamma_ctx, inst.gamma, inst.betas),
                             all_alphas, no_cells, {}, {});
  Expr1 gamma_beta = subst_1in1(inst.gamma, bexprs, bvc);
  r1 = path_concat(r1, norm_path(m, bctx_all, gamma_beta, flat_alphas));

  // route 2: Ic under gamma, componentwise norms under gamma, outer norm
  std::vector<std::pair<OneCell, OneCell>> comps;
  for (size_t i = 0; i < n; ++i)
    comps.push_back({g_cells[i], beta_cells[i]});
  InterpPath r2 = embed_path(mg, ic_path(m, comps), no_cells, gamma_cell, {}, {});
  for (size_t i = 0; i < n; ++i) {
    InterpPath rec = norm_path(m, inst.betas[i].first, inst.betas[i].second, inst.alphas[i]);
    ObjSeq pre, suf;
    std::vector<OneCell> left_parts, right_parts;
    for (size_t j = 0; j < i; ++j) {
      pre.push_back(inst.gamma_ctx[j]);
      left_parts.push_back(normed[j]);
    }
    for (size_t j = i + 1; j < n; ++j) {
      Boundary bj = boundary(mg, raw[j]);
      suf.insert(suf.end(), bj.source.begin(), bj.source.end());
      right_parts.push_back(raw[j]);
    }
    OneCell left = whisker({}, tensor_all(mg, left_parts),
                           concat(boundary(mg, rec.source).source, suf));
    ObjSeq mid_tgt = pre;
    mid_tgt.push_back(inst.gamma_ctx[i]);
    OneCell right =
        compose(mg, whisker(mid_tgt, tensor_all(mg, right_parts), {}), gamma_cell);
    r2 = path_concat(r2, embed_path(mg, rec, left, right, pre, suf));
  }
  r2 = path_concat(r2, norm_path(m, inst.gamma_ctx, inst.gamma, substituted));
  return {std::move(r1), std::move(r2)};
}

std::string print_path(const InterpPath& p) {
  std::ostringstream os;
  os << "source: " << print_term(p.source) << "\n";
  for (size_t i = 0; i < p.steps.size(); ++i) {
    const PathStep& s = p.steps[i];
    os << "  step " << i + 1 << ": ";
    if (const auto* r = std::get_if<RewriteStep>(&s)) {
      os << (r->inverse ? "inverse " : "") << to_string(r->redex.kind) << " @ "
         << r->redex.index;
    } else {
      const auto& g = std::get<GenStep>(s);
      os << (g.inverse ? "inverse " : "") << "generator " << g.cell;
    }
    os << "\n    -> " << print_term(step_after(s)) << "\n";
  }
  os << "target: " << print_term(p.target) << "\n";
  return os.str();
}

} // namespace graycal
