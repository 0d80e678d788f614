// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/theory.hpp"

#include "graycal/check.hpp"

#include <sstream>

namespace graycal {

Diagnostics validate_theory(const Theory& t) {
  Diagnostics ds = t.base.validate();
  auto push = [&](const std::string& m) { ds.push_back({0, 0, m}); };
  for (size_t i = 0; i < t.cells.size(); ++i)
    for (size_t j = i + 1; j < t.cells.size(); ++j)
      if (t.cells[i].name == t.cells[j].name)
        push("duplicate cell " + t.cells[i].name);
  for (size_t i = 0; i < t.equations.size(); ++i)
    for (size_t j = i + 1; j < t.equations.size(); ++j)
      if (t.equations[i].name == t.equations[j].name)
        push("duplicate equation " + t.equations[i].name);
  for (const auto& c : t.cells) {
    for (const auto& o : c.ctx)
      if (!t.base.has_object(o))
        push("unknown object " + o + " in context of cell " + c.name);
    try {
      std::string lo = check_expr1(t, c.ctx, c.lhs);
      std::string ro = check_expr1(t, c.ctx, c.rhs);
      if (lo != ro)
        push("cell " + c.name + " has sides in different objects " + lo + " and " + ro);
      else if (lo != c.object)
        push("cell " + c.name + " declares object " + c.object + " but sides are in " + lo);
    } catch (const CheckFailure& e) {
      push("cell " + c.name + ": " + e.what());
    }
  }
  for (const auto& q : t.equations) {
    for (const auto& o : q.ctx)
      if (!t.base.has_object(o))
        push("unknown object " + o + " in context of equation " + q.name);
    try {
      Boundary2 bl = infer_expr2(t, q.ctx, q.lhs);
      Boundary2 br = infer_expr2(t, q.ctx, q.rhs);
      if (bl.object != br.object || !(bl.src == br.src) || !(bl.tgt == br.tgt))
        push("equation " + q.name + " sides are not parallel");
      else if (bl.object != q.object || !(bl.src == q.src) || !(bl.tgt == q.tgt))
        push("equation " + q.name + " declares a boundary its sides do not have");
    } catch (const CheckFailure& e) {
      push("equation " + q.name + ": " + e.what());
    }
  }
  return ds;
}

namespace {

std::string show_ctx(const Context& ctx, const std::vector<std::string>& names) {
  std::string out = "[";
  for (size_t i = 0; i < ctx.size(); ++i) {
    if (i)
      out += ", ";
    out += names[i] + ":" + ctx[i];
  }
  return out + "]";
}

} // namespace

std::string serialize_theory(const Theory& t) {
  std::ostringstream os;
  os << "theory " << t.name << "\n";
  for (const auto& o : t.base.objects)
    os << "object " << o << "\n";
  for (const auto& a : t.base.arrows) {
    os << "arrow " << a.name << " :";
    for (const auto& i : a.inputs)
      os << " " << i;
    os << " -> " << a.output << "\n";
  }
  for (const auto& c : t.cells) {
    auto names = default_names(c.ctx.size());
    os << "cell " << c.name << " " << show_ctx(c.ctx, names) << " : "
       << print_expr1(c.lhs, names) << " => " << print_expr1(c.rhs, names) << "\n";
  }
  for (const auto& q : t.equations) {
    auto names = default_names(q.ctx.size());
    os << "equation " << q.name << " " << show_ctx(q.ctx, names) << " : "
       << print_expr2(q.lhs, names) << " = " << print_expr2(q.rhs, names) << "\n";
  }
  return os.str();
}

} // namespace graycal
