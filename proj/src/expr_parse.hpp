// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/expr.hpp"
#include "lexer.hpp"

#include <map>
#include <optional>

namespace graycal {

// Surface expression trees, names unresolved.
struct SExpr1 {
  Token head;
  bool applied = false; // P(...) vs bare name
  std::vector<SExpr1> args;
};

struct SExpr2;
struct SId2 {
  SExpr1 body;
};
struct SGen2 {
  Token head;
  std::vector<SExpr1> args;
};
struct SComp2 {
  std::vector<SExpr2> parts; // >= 2, right-nested on elaboration
};
struct SApp2 {
  Token head;
  std::vector<SExpr2> args;
};
struct SExpr2 {
  std::variant<SId2, SGen2, SComp2, SApp2> node;
};

std::optional<SExpr1> parse_sexpr1(Lexer& lx, Diagnostics& ds);
std::optional<SExpr2> parse_sexpr2(Lexer& lx, Diagnostics& ds);

// Resolves surface names to positional indices. In declared-order mode the
// whole declared context is the context of every literal; in first-use mode
// each literal gets the narrowest context, ordered by first occurrence.
class Elaborator {
public:
  Elaborator(const std::vector<std::string>& names, const Context& objects, bool first_use)
      : first_use_(first_use) {
    for (size_t i = 0; i < names.size(); ++i)
      declared_[names[i]] = {i, objects[i]};
    if (!first_use) {
      ctx_ = objects;
      names_ = names;
    }
  }

  std::optional<Expr1> run1(const SExpr1& e, Diagnostics& ds) {
    auto r = walk1(e, ds);
    return r;
  }
  std::optional<Expr2> run2(const SExpr2& e, Diagnostics& ds);

  const Context& ctx() const { return ctx_; }
  const std::vector<std::string>& names() const { return names_; }

private:
  std::optional<Expr1> walk1(const SExpr1& e, Diagnostics& ds);

  std::optional<size_t> resolve(const Token& t, Diagnostics& ds) {
    auto it = declared_.find(t.text);
    if (it == declared_.end()) {
      ds.push_back({t.line, t.col, "unknown name " + t.text});
      return std::nullopt;
    }
    if (!first_use_)
      return it->second.first;
    auto used = index_.find(t.text);
    if (used != index_.end())
      return used->second;
    size_t idx = ctx_.size();
    index_[t.text] = idx;
    ctx_.push_back(it->second.second);
    names_.push_back(t.text);
    return idx;
  }

  bool first_use_;
  std::map<std::string, std::pair<size_t, std::string>> declared_;
  std::map<std::string, size_t> index_;
  Context ctx_;
  std::vector<std::string> names_;
};

} // namespace graycal
