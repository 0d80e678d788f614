// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/theory.hpp"

namespace graycal {

// Thrown by the sequent checkers; the message carries a path into the
// offending (sub)derivation.
struct CheckFailure : GrayError {
  using GrayError::GrayError;
};

// Accepts exactly the derivable 1-cell sequents ctx |- e : object and
// returns the result object. Enforces linearity and left-to-right variable
// order.
std::string check_expr1(const Theory& t, const Context& ctx, const Expr1& e);

struct Boundary2 {
  Expr1 src;
  Expr1 tgt;
  std::string object;
};

// Type-checks a 2-cell expression and computes its boundary.
Boundary2 infer_expr2(const Theory& t, const Context& ctx, const Expr2& e);

// beta over an n-entry context, args[i] derivable over its own context;
// the result is derivable over the concatenation of the argument contexts.
Expr1 subst_1in1(const Expr1& beta, const std::vector<Expr1>& args,
                 const std::vector<size_t>& arg_var_counts);

// phi over an n-entry context, 1-cell args substituted for its variables.
Expr2 subst_1in2(const Expr2& phi, const std::vector<Expr1>& args,
                 const std::vector<size_t>& arg_var_counts);

// gamma over an n-entry context, 2-cell args substituted for its variables.
// Constants become nullary applications, per the inductive construction.
Expr2 subst_2in1(const Expr1& gamma, const std::vector<Expr2>& args,
                 const std::vector<size_t>& arg_var_counts);

// Convenience: variable counts of a list of expressions.
std::vector<size_t> var_counts(const std::vector<Expr1>& es);
std::vector<size_t> var_counts2(const std::vector<Expr2>& es);

} // namespace graycal
