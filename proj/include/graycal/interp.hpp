// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/check.hpp"
#include "graycal/rewrite.hpp"

namespace graycal {

// The canonical model of a theory in the free Gray monoid over its base:
// objects map to single wires, arrows to bare multiarrow generators, 2-cell
// symbols to opaque generator steps.
struct FreeModel {
  Theory theory;
};

FreeModel free_model(const Theory& t);

// A 2-cell generator instance used as one step of an interpreted path.
// `before` and `after` are the full composite 1-cells around the step.
struct GenStep {
  ObjSeq prefix;
  std::string cell;
  std::vector<OneCell> args;
  ObjSeq suffix;
  bool inverse = false;
  OneCell before;
  OneCell after;
};

using PathStep = std::variant<RewriteStep, GenStep>;

const OneCell& step_before(const PathStep& s);
const OneCell& step_after(const PathStep& s);

// A composable sequence of structural rewrite steps and generator steps.
// Endpoints are stored so empty paths carry their boundary.
struct InterpPath {
  OneCell source;
  std::vector<PathStep> steps;
  OneCell target;

  static InterpPath identity(OneCell f) { return {f, {}, f}; }
};

InterpPath path_concat(const InterpPath& a, const InterpPath& b);
InterpPath path_reversed(const InterpPath& p);

// Re-seats a path inside a larger composite: every 1-cell x along the path
// becomes compose(left, whisker(pre, x, suf), right). A left or right with
// no cells acts as the fitting identity.
InterpPath embed_path(const Multigraph& mg, const InterpPath& p, const OneCell& left,
                      const OneCell& right, const ObjSeq& pre, const ObjSeq& suf);

ObjSeq interp_ctx(const FreeModel& m, const Context& ctx);

// Var -> identity wire; App(f, args) -> tensor of the argument
// interpretations followed by the generator of f.
OneCell interp_expr1(const FreeModel& m, const Context& ctx, const Expr1& e);

OneCell tensor_all(const Multigraph& mg, const std::vector<OneCell>& fs);

// The canonical interchange 2-cell Ic: from tensor(g_i) then tensor(f_i) to
// tensor(g_i then f_i), as a sequence of negative interchange steps, moving
// each f block left past the later g blocks in order.
InterpPath ic_path(const FreeModel& m, const std::vector<std::pair<OneCell, OneCell>>& comps);

// The normalisation isomorphism: a purely structural path from
// compose(tensor of interpreted inners, interpretation of outer) to the
// interpretation of the substituted expression. Ic steps first, then the
// recursive norms left to right.
InterpPath norm_path(const FreeModel& m, const Context& outer_ctx, const Expr1& outer,
                     const std::vector<std::pair<Context, Expr1>>& inners);

// Id -> empty path; Comp -> concatenation; App -> whiskered argument paths
// in left-first order; Gen -> inverse norm, generator step, forward norm.
InterpPath interp_expr2(const FreeModel& m, const Context& ctx, const Expr2& e);

// Equal source and target 1-cells, by cell-sequence equality.
bool check_parallel(const InterpPath& p, const InterpPath& q);

// A three-layer substitution instance: gamma over its context, one beta per
// gamma variable, one alpha per beta variable.
struct DoubleNormInstance {
  Context gamma_ctx;
  Expr1 gamma;
  std::vector<std::pair<Context, Expr1>> betas;
  std::vector<std::vector<std::pair<Context, Expr1>>> alphas;
};

// The two composite structural paths of the double-norm square, from
// compose(tensor of alpha interps, tensor of beta interps, gamma interp)
// to the interpretation of the fully substituted expression. They are
// parallel; coherence makes them equal as 2-cells.
std::pair<InterpPath, InterpPath> double_norm_routes(const FreeModel& m,
                                                     const DoubleNormInstance& inst);

std::string print_path(const InterpPath& p);

} // namespace graycal
