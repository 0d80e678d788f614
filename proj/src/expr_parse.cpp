// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "expr_parse.hpp"

namespace graycal {

namespace {

bool expect(Lexer& lx, Tok k, const char* what, Diagnostics& ds) {
  if (lx.at(k)) {
    lx.next();
    return true;
  }
  ds.push_back({lx.peek().line, lx.peek().col,
                std::string("expected ") + what + ", found '" + lx.peek().text + "'"});
  return false;
}

} // namespace

std::optional<SExpr1> parse_sexpr1(Lexer& lx, Diagnostics& ds) {
  if (!lx.at(Tok::Ident)) {
    ds.push_back({lx.peek().line, lx.peek().col, "expected an expression"});
    return std::nullopt;
  }
  SExpr1 e;
  e.head = lx.next();
  if (lx.at(Tok::LParen)) {
    e.applied = true;
    lx.next();
    if (!lx.at(Tok::RParen)) {
      for (;;) {
        auto a = parse_sexpr1(lx, ds);
        if (!a)
          return std::nullopt;
        e.args.push_back(std::move(*a));
        if (lx.at(Tok::Comma)) {
          lx.next();
          continue;
        }
        break;
      }
    }
    if (!expect(lx, Tok::RParen, "')'", ds))
      return std::nullopt;
  }
  return e;
}

std::optional<SExpr2> parse_sexpr2(Lexer& lx, Diagnostics& ds) {
  if (lx.at_ident("id")) {
    lx.next();
    auto b = parse_sexpr1(lx, ds);
    if (!b)
      return std::nullopt;
    return SExpr2{SId2{std::move(*b)}};
  }
  if (lx.at_ident("comp")) {
    Token head = lx.next();
    if (!expect(lx, Tok::LParen, "'('", ds))
      return std::nullopt;
    SComp2 c;
    for (;;) {
      auto p = parse_sexpr2(lx, ds);
      if (!p)
        return std::nullopt;
      c.parts.push_back(std::move(*p));
      if (lx.at(Tok::Comma)) {
        lx.next();
        continue;
      }
      break;
    }
    if (!expect(lx, Tok::RParen, "')'", ds))
      return std::nullopt;
    if (c.parts.size() < 2) {
      ds.push_back({head.line, head.col, "comp needs at least two parts"});
      return std::nullopt;
    }
    return SExpr2{std::move(c)};
  }
  if (!lx.at(Tok::Ident)) {
    ds.push_back({lx.peek().line, lx.peek().col, "expected a 2-cell expression"});
    return std::nullopt;
  }
  Token head = lx.next();
  if (lx.at(Tok::LBracket)) {
    lx.next();
    SGen2 g{head, {}};
    if (!lx.at(Tok::RBracket)) {
      for (;;) {
        auto a = parse_sexpr1(lx, ds);
        if (!a)
          return std::nullopt;
        g.args.push_back(std::move(*a));
        if (lx.at(Tok::Comma)) {
          lx.next();
          continue;
        }
        break;
      }
    }
    if (!expect(lx, Tok::RBracket, "']'", ds))
      return std::nullopt;
    return SExpr2{std::move(g)};
  }
  if (lx.at(Tok::LParen)) {
    lx.next();
    SApp2 a{head, {}};
    if (!lx.at(Tok::RParen)) {
      for (;;) {
        auto x = parse_sexpr2(lx, ds);
        if (!x)
          return std::nullopt;
        a.args.push_back(std::move(*x));
        if (lx.at(Tok::Comma)) {
          lx.next();
          continue;
        }
        break;
      }
    }
    if (!expect(lx, Tok::RParen, "')'", ds))
      return std::nullopt;
    return SExpr2{std::move(a)};
  }
  ds.push_back({head.line, head.col,
                "expected '[' or '(' after " + head.text + " in a 2-cell expression"});
  return std::nullopt;
}

std::optional<Expr1> Elaborator::walk1(const SExpr1& e, Diagnostics& ds) {
  if (!e.applied) {
    auto idx = resolve(e.head, ds);
    if (!idx)
      return std::nullopt;
    return Expr1::var(*idx);
  }
  std::vector<Expr1> args;
  args.reserve(e.args.size());
  for (const auto& a : e.args) {
    auto x = walk1(a, ds);
    if (!x)
      return std::nullopt;
    args.push_back(std::move(*x));
  }
  return Expr1::app(e.head.text, std::move(args));
}

std::optional<Expr2> Elaborator::run2(const SExpr2& e, Diagnostics& ds) {
  return std::visit(
      [&](const auto& n) -> std::optional<Expr2> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SId2>) {
          auto b = walk1(n.body, ds);
          if (!b)
            return std::nullopt;
          return Expr2::id(std::move(*b));
        } else if constexpr (std::is_same_v<T, SGen2>) {
          std::vector<Expr1> args;
          for (const auto& a : n.args) {
            auto x = walk1(a, ds);
            if (!x)
              return std::nullopt;
            args.push_back(std::move(*x));
          }
          return Expr2::gen(n.head.text, std::move(args));
        } else if constexpr (std::is_same_v<T, SComp2>) {
          // right-nest: comp(a, b, c) = comp(a, comp(b, c))
          std::vector<Expr2> parts;
          for (const auto& p : n.parts) {
            auto x = run2(p, ds);
            if (!x)
              return std::nullopt;
            parts.push_back(std::move(*x));
          }
          Expr2 acc = std::move(parts.back());
          for (size_t i = parts.size() - 1; i-- > 0;)
            acc = Expr2::comp(std::move(parts[i]), std::move(acc));
          return acc;
        } else {
          std::vector<Expr2> args;
          for (const auto& a : n.args) {
            auto x = run2(a, ds);
            if (!x)
              return std::nullopt;
            args.push_back(std::move(*x));
          }
          return Expr2::app(n.head.text, std::move(args));
        }
      },
      e.node);
}

} // namespace graycal
