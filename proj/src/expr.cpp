// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/expr.hpp"

#include <sstream>

namespace graycal {

size_t var_count(const Expr1& e) {
  if (std::holds_alternative<Var>(e.node))
    return 1;
  size_t n = 0;
  for (const auto& a : std::get<App1>(e.node).args)
    n += var_count(a);
  return n;
}

Expr1 shift_vars(const Expr1& e, size_t delta) {
  if (const auto* v = std::get_if<Var>(&e.node))
    return Expr1::var(v->index + delta);
  const auto& a = std::get<App1>(e.node);
  std::vector<Expr1> args;
  args.reserve(a.args.size());
  for (const auto& x : a.args)
    args.push_back(shift_vars(x, delta));
  return Expr1::app(a.symbol, std::move(args));
}

std::string print_expr1(const Expr1& e, const std::vector<std::string>& names) {
  if (const auto* v = std::get_if<Var>(&e.node))
    return v->index < names.size() ? names[v->index] : "?" + std::to_string(v->index);
  const auto& a = std::get<App1>(e.node);
  std::string out = a.symbol + "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i)
      out += ", ";
    out += print_expr1(a.args[i], names);
  }
  return out + ")";
}

size_t var_count(const Expr2& e) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return var_count(n.body);
        } else if constexpr (std::is_same_v<T, Gen2>) {
          size_t c = 0;
          for (const auto& a : n.args)
            c += var_count(a);
          return c;
        } else if constexpr (std::is_same_v<T, Comp2>) {
          return var_count(n.parts[0]);
        } else {
          size_t c = 0;
          for (const auto& a : n.args)
            c += var_count(a);
          return c;
        }
      },
      e.node);
}

Expr2 shift_vars(const Expr2& e, size_t delta) {
  return std::visit(
      [&](const auto& n) -> Expr2 {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return Expr2::id(shift_vars(n.body, delta));
        } else if constexpr (std::is_same_v<T, Gen2>) {
          std::vector<Expr1> args;
          for (const auto& a : n.args)
            args.push_back(shift_vars(a, delta));
          return Expr2::gen(n.cell, std::move(args));
        } else if constexpr (std::is_same_v<T, Comp2>) {
          return Expr2::comp(shift_vars(n.parts[0], delta), shift_vars(n.parts[1], delta));
        } else {
          std::vector<Expr2> args;
          for (const auto& a : n.args)
            args.push_back(shift_vars(a, delta));
          return Expr2::app(n.symbol, std::move(args));
        }
      },
      e.node);
}

namespace {

void flatten_comp(const Expr2& e, std::vector<const Expr2*>& out) {
  if (const auto* c = std::get_if<Comp2>(&e.node)) {
    flatten_comp(c->parts[0], out);
    flatten_comp(c->parts[1], out);
  } else {
    out.push_back(&e);
  }
}

} // namespace

bool expr2_equal(const Expr2& a, const Expr2& b) {
  if (std::holds_alternative<Comp2>(a.node) || std::holds_alternative<Comp2>(b.node)) {
    std::vector<const Expr2*> fa, fb;
    flatten_comp(a, fa);
    flatten_comp(b, fb);
    if (fa.size() != fb.size())
      return false;
    for (size_t i = 0; i < fa.size(); ++i)
      if (!expr2_equal(*fa[i], *fb[i]))
        return false;
    return true;
  }
  if (a.node.index() != b.node.index())
    return false;
  if (const auto* i1 = std::get_if<Id2>(&a.node))
    return i1->body == std::get<Id2>(b.node).body;
  if (const auto* g1 = std::get_if<Gen2>(&a.node)) {
    const auto& g2 = std::get<Gen2>(b.node);
    return g1->cell == g2.cell && g1->args == g2.args;
  }
  const auto& a1 = std::get<App2>(a.node);
  const auto& a2 = std::get<App2>(b.node);
  if (a1.symbol != a2.symbol || a1.args.size() != a2.args.size())
    return false;
  for (size_t i = 0; i < a1.args.size(); ++i)
    if (!expr2_equal(a1.args[i], a2.args[i]))
      return false;
  return true;
}

std::string print_expr2(const Expr2& e, const std::vector<std::string>& names) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Id2>) {
          return "id " + print_expr1(n.body, names);
        } else if constexpr (std::is_same_v<T, Gen2>) {
          std::string out = n.cell + "[";
          for (size_t i = 0; i < n.args.size(); ++i) {
            if (i)
              out += ", ";
            out += print_expr1(n.args[i], names);
          }
          return out + "]";
        } else if constexpr (std::is_same_v<T, Comp2>) {
          std::vector<const Expr2*> parts;
          flatten_comp(e, parts);
          std::string out = "comp(";
          for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
              out += ", ";
            out += print_expr2(*parts[i], names);
          }
          return out + ")";
        } else {
          std::string out = n.symbol + "(";
          for (size_t i = 0; i < n.args.size(); ++i) {
            if (i)
              out += ", ";
            out += print_expr2(n.args[i], names);
          }
          return out + ")";
        }
      },
      e.node);
}

std::vector<std::string> default_names(size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26)
      s += std::to_string(i / 26);
    names.push_back(s);
  }
  return names;
}

} // namespace graycal
