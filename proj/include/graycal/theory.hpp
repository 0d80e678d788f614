// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/expr.hpp"
#include "graycal/multigraph.hpp"

namespace graycal {

// A 2-cell generator t with boundary lhs => rhs over a positional context.
struct CellDecl {
  std::string name;
  Context ctx;
  Expr1 lhs;
  Expr1 rhs;
  std::string object; // common result object of the two sides

  bool operator==(const CellDecl&) const = default;
};

// An equation axiom between two parallel 2-cell expressions.
struct EqDecl {
  std::string name;
  Context ctx;
  std::string object;
  Expr1 src;
  Expr1 tgt;
  Expr2 lhs;
  Expr2 rhs;

  bool operator==(const EqDecl& o) const {
    return name == o.name && ctx == o.ctx && object == o.object && src == o.src &&
           tgt == o.tgt && expr2_equal(lhs, o.lhs) && expr2_equal(rhs, o.rhs);
  }
};

// A signature: objects, multiarrow 1-cell symbols, 2-cell generators and
// equation axioms. Immutable after construction.
struct Theory {
  std::string name;
  Multigraph base;
  std::vector<CellDecl> cells;
  std::vector<EqDecl> equations;

  bool operator==(const Theory&) const = default;

  const CellDecl* find_cell(const std::string& n) const {
    for (const auto& c : cells)
      if (c.name == n)
        return &c;
    return nullptr;
  }
  const EqDecl* find_equation(const std::string& n) const {
    for (const auto& e : equations)
      if (e.name == n)
        return &e;
    return nullptr;
  }
};

// Re-derives every declaration; empty means well-formed.
Diagnostics validate_theory(const Theory& t);

std::string serialize_theory(const Theory& t);

// name in {"pseudomonoid", "example-G0"}
Theory builtin_theory(const std::string& name);

} // namespace graycal
