// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/diagnostics.hpp"

#include <string>
#include <variant>
#include <vector>

namespace graycal {

// Contexts are positional: a context is the sequence of its entries'
// objects. Surface names exist only in the DSL, which makes closure under
// renaming automatic.
using Context = std::vector<std::string>;

struct Expr1;

struct Var {
  size_t index;
  bool operator==(const Var&) const = default;
};

struct App1 {
  std::string symbol;
  std::vector<Expr1> args;
  bool operator==(const App1&) const = default;
};

// A 1-cell expression of the components calculus. Linearity and order:
// a well-formed expression over an n-entry context uses variables
// 0..n-1, each exactly once, in left-to-right order.
struct Expr1 {
  std::variant<Var, App1> node;
  bool operator==(const Expr1&) const = default;

  static Expr1 var(size_t i) { return Expr1{Var{i}}; }
  static Expr1 app(std::string f, std::vector<Expr1> args) {
    return Expr1{App1{std::move(f), std::move(args)}};
  }
};

size_t var_count(const Expr1& e);
// Shifts every variable index by `delta`.
Expr1 shift_vars(const Expr1& e, size_t delta);
// Canonical printing with positional variable names drawn from `names`.
std::string print_expr1(const Expr1& e, const std::vector<std::string>& names);

struct Expr2;

struct Id2 {
  Expr1 body;
  bool operator==(const Id2&) const = default;
};

// A 2-cell generator applied to 1-cell expressions, one per entry of the
// generator's context.
struct Gen2 {
  std::string cell;
  std::vector<Expr1> args;
  bool operator==(const Gen2&) const = default;
};

// Binary vertical composition, read right-to-left: parts[1] acts first.
struct Comp2 {
  std::vector<Expr2> parts; // exactly two
  bool operator==(const Comp2&) const = default;
};

struct App2 {
  std::string symbol;
  std::vector<Expr2> args;
  bool operator==(const App2&) const = default;
};

struct Expr2 {
  std::variant<Id2, Gen2, Comp2, App2> node;
  bool operator==(const Expr2&) const = default;

  static Expr2 id(Expr1 body) { return Expr2{Id2{std::move(body)}}; }
  static Expr2 gen(std::string cell, std::vector<Expr1> args) {
    return Expr2{Gen2{std::move(cell), std::move(args)}};
  }
  static Expr2 comp(Expr2 f, Expr2 g) {
    return Expr2{Comp2{{std::move(f), std::move(g)}}};
  }
  static Expr2 app(std::string f, std::vector<Expr2> args) {
    return Expr2{App2{std::move(f), std::move(args)}};
  }
};

size_t var_count(const Expr2& e);
Expr2 shift_vars(const Expr2& e, size_t delta);
std::string print_expr2(const Expr2& e, const std::vector<std::string>& names);

// Vertical composition of 2-cells is strictly associative in any
// bicategory, and the source language writes multi-step composites without
// brackets, so expression equality compares Comp spines flattened.
bool expr2_equal(const Expr2& a, const Expr2& b);

std::vector<std::string> default_names(size_t n);

} // namespace graycal
