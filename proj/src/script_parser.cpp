// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/script_parser.hpp"

#include "expr_parse.hpp"

#include <sstream>

namespace graycal {

namespace {

struct ScriptParser {
  Lexer& lx;
  Diagnostics& ds;
  const std::vector<std::string>& lemma_names;
  const Context& lemma_objs;

  bool expect(Tok k, const char* what) {
    if (lx.at(k)) {
      lx.next();
      return true;
    }
    ds.push_back({lx.peek().line, lx.peek().col,
                  std::string("expected ") + what + ", found '" + lx.peek().text + "'"});
    return false;
  }

  std::optional<InCtx<Expr1>> leaf1() {
    auto s = parse_sexpr1(lx, ds);
    if (!s)
      return std::nullopt;
    Elaborator el(lemma_names, lemma_objs, /*first_use=*/true);
    auto e = el.run1(*s, ds);
    if (!e)
      return std::nullopt;
    return InCtx<Expr1>{el.ctx(), std::move(*e), el.names()};
  }

  std::optional<InCtx<Expr2>> leaf2() {
    auto s = parse_sexpr2(lx, ds);
    if (!s)
      return std::nullopt;
    Elaborator el(lemma_names, lemma_objs, /*first_use=*/true);
    auto e = el.run2(*s, ds);
    if (!e)
      return std::nullopt;
    return InCtx<Expr2>{el.ctx(), std::move(*e), el.names()};
  }

  void skip_comma() {
    if (lx.at(Tok::Comma))
      lx.next();
  }

  // zero or more Expr1 leaves up to ')'
  bool leaves1(std::vector<InCtx<Expr1>>& out) {
    while (!lx.at(Tok::RParen) && !lx.at(Tok::Eof)) {
      auto a = leaf1();
      if (!a)
        return false;
      out.push_back(std::move(*a));
      skip_comma();
    }
    return true;
  }

  bool leaves2_until(Tok end, std::vector<InCtx<Expr2>>& out) {
    while (!lx.at(end) && !lx.at(Tok::Eof)) {
      auto a = leaf2();
      if (!a)
        return false;
      out.push_back(std::move(*a));
      skip_comma();
    }
    return true;
  }

  std::optional<EqDerivation> deriv() {
    if (!expect(Tok::LParen, "'('"))
      return std::nullopt;
    if (!lx.at(Tok::Ident)) {
      ds.push_back({lx.peek().line, lx.peek().col, "expected a rule keyword"});
      return std::nullopt;
    }
    Token kw = lx.next();
    std::optional<EqDerivation> out;
    if (kw.text == "refl") {
      auto a = leaf2();
      if (a)
        out = EqDerivation{DRefl{std::move(*a)}};
    } else if (kw.text == "sym") {
      auto c = deriv();
      if (c)
        out = EqDerivation{DSym{{std::move(*c)}}};
    } else if (kw.text == "trans") {
      auto a = deriv();
      std::optional<EqDerivation> b;
      if (a)
        b = deriv();
      if (b)
        out = EqDerivation{DTrans{{std::move(*a), std::move(*b)}}};
    } else if (kw.text == "axiom") {
      if (!lx.at(Tok::Ident)) {
        ds.push_back({kw.line, kw.col, "axiom expects an equation name"});
        return std::nullopt;
      }
      DEqAxiom n{lx.next().text, {}};
      if (leaves1(n.args))
        out = EqDerivation{std::move(n)};
    } else if (kw.text == "comp-cong") {
      auto a = deriv();
      std::optional<EqDerivation> b;
      if (a)
        b = deriv();
      if (b)
        out = EqDerivation{DCompCong{{std::move(*a), std::move(*b)}}};
    } else if (kw.text == "app-cong") {
      if (!lx.at(Tok::Ident)) {
        ds.push_back({kw.line, kw.col, "app-cong expects a 1-cell symbol"});
        return std::nullopt;
      }
      DAppCong n{lx.next().text, {}};
      bool ok = true;
      while (ok && !lx.at(Tok::RParen) && !lx.at(Tok::Eof)) {
        auto c = deriv();
        if (!c)
          ok = false;
        else
          n.children.push_back(std::move(*c));
      }
      if (ok)
        out = EqDerivation{std::move(n)};
    } else if (kw.text == "func-id") {
      if (!lx.at(Tok::Ident)) {
        ds.push_back({kw.line, kw.col, "func-id expects a 1-cell symbol"});
        return std::nullopt;
      }
      DFuncId n{lx.next().text, {}};
      if (leaves1(n.args))
        out = EqDerivation{std::move(n)};
    } else if (kw.text == "func-comp") {
      if (!lx.at(Tok::Ident)) {
        ds.push_back({kw.line, kw.col, "func-comp expects a 1-cell symbol"});
        return std::nullopt;
      }
      DFuncComp n{lx.next().text, {}, {}};
      bool ok = expect(Tok::LBracket, "'['") && leaves2_until(Tok::RBracket, n.phis) &&
                expect(Tok::RBracket, "']'") && expect(Tok::LBracket, "'['") &&
                leaves2_until(Tok::RBracket, n.psis) && expect(Tok::RBracket, "']'");
      if (ok)
        out = EqDerivation{std::move(n)};
    } else if (kw.text == "unit-l" || kw.text == "unit-r") {
      auto a = leaf2();
      if (a) {
        if (kw.text == "unit-l")
          out = EqDerivation{DUnitL{std::move(*a)}};
        else
          out = EqDerivation{DUnitR{std::move(*a)}};
      }
    } else if (kw.text == "nat") {
      if (!lx.at(Tok::Ident)) {
        ds.push_back({kw.line, kw.col, "nat expects a 2-cell symbol"});
        return std::nullopt;
      }
      DNat n{lx.next().text, {}};
      if (leaves2_until(Tok::RParen, n.args))
        out = EqDerivation{std::move(n)};
    } else {
      ds.push_back({kw.line, kw.col, "unknown rule keyword " + kw.text});
      return std::nullopt;
    }
    if (!out)
      return std::nullopt;
    if (!expect(Tok::RParen, "')'"))
      return std::nullopt;
    return out;
  }
};

bool parse_lemma_ctx(Lexer& lx, Diagnostics& ds, std::vector<std::string>& names,
                     Context& objs) {
  auto expect = [&](Tok k, const char* what) {
    if (lx.at(k)) {
      lx.next();
      return true;
    }
    ds.push_back({lx.peek().line, lx.peek().col, std::string("expected ") + what});
    return false;
  };
  if (!expect(Tok::LBracket, "'['"))
    return false;
  if (!lx.at(Tok::RBracket)) {
    for (;;) {
      if (!lx.at(Tok::Ident)) {
        ds.push_back({lx.peek().line, lx.peek().col, "expected a context name"});
        return false;
      }
      Token name = lx.next();
      if (!expect(Tok::Colon, "':'"))
        return false;
      if (!lx.at(Tok::Ident)) {
        ds.push_back({lx.peek().line, lx.peek().col, "expected an object name"});
        return false;
      }
      names.push_back(name.text);
      objs.push_back(lx.next().text);
      if (lx.at(Tok::Comma)) {
        lx.next();
        continue;
      }
      break;
    }
  }
  return expect(Tok::RBracket, "']'");
}

} // namespace

ScriptParse parse_script(const std::string& text) {
  Lexer lx(text);
  Diagnostics ds;
  ProofScript script;
  while (!lx.at(Tok::Eof)) {
    if (!lx.at_ident("lemma")) {
      ds.push_back({lx.peek().line, lx.peek().col,
                    "expected 'lemma', found '" + lx.peek().text + "'"});
      break;
    }
    lx.next();
    if (!lx.at(Tok::Ident)) {
      ds.push_back({lx.peek().line, lx.peek().col, "expected a lemma name"});
      break;
    }
    Lemma lm;
    lm.name = lx.next().text;
    if (!parse_lemma_ctx(lx, ds, lm.var_names, lm.ctx))
      break;
    if (!lx.at(Tok::Colon)) {
      ds.push_back({lx.peek().line, lx.peek().col, "expected ':'"});
      break;
    }
    lx.next();
    auto l = parse_sexpr2(lx, ds);
    if (!l)
      break;
    if (!lx.at(Tok::Equals)) {
      ds.push_back({lx.peek().line, lx.peek().col, "expected '='"});
      break;
    }
    lx.next();
    auto r = parse_sexpr2(lx, ds);
    if (!r)
      break;
    // Goal sides are elaborated against the full declared context in
    // declaration order.
    Elaborator el(lm.var_names, lm.ctx, /*first_use=*/false);
    auto le = el.run2(*l, ds);
    std::optional<Expr2> re;
    if (le)
      re = el.run2(*r, ds);
    if (!re)
      break;
    lm.lhs = std::move(*le);
    lm.rhs = std::move(*re);
    if (!lx.at_ident("by")) {
      ds.push_back({lx.peek().line, lx.peek().col, "expected 'by'"});
      break;
    }
    lx.next();
    ScriptParser sp{lx, ds, lm.var_names, lm.ctx};
    auto d = sp.deriv();
    if (!d)
      break;
    lm.proof = std::move(*d);
    script.lemmas.push_back(std::move(lm));
  }
  for (const auto& d : lx.diagnostics())
    ds.push_back(d);
  if (!ds.empty())
    return {std::nullopt, ds};
  return {script, {}};
}

namespace {

void print_deriv(std::ostream& os, const EqDerivation& d, int indent);

void nl_indent(std::ostream& os, int indent) {
  os << "\n";
  for (int i = 0; i < indent; ++i)
    os << "  ";
}

void print_deriv(std::ostream& os, const EqDerivation& d, int indent) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        os << "(" << rule_name(d);
        if constexpr (std::is_same_v<T, DRefl> || std::is_same_v<T, DUnitL> ||
                      std::is_same_v<T, DUnitR>) {
          os << " " << print_expr2(n.arg.expr, n.arg.names);
        } else if constexpr (std::is_same_v<T, DSym> || std::is_same_v<T, DTrans> ||
                             std::is_same_v<T, DCompCong>) {
          for (const auto& c : n.children) {
            nl_indent(os, indent + 1);
            print_deriv(os, c, indent + 1);
          }
        } else if constexpr (std::is_same_v<T, DEqAxiom>) {
          os << " " << n.name;
          for (const auto& a : n.args)
            os << " " << print_expr1(a.expr, a.names);
        } else if constexpr (std::is_same_v<T, DAppCong>) {
          os << " " << n.symbol;
          for (const auto& c : n.children) {
            nl_indent(os, indent + 1);
            print_deriv(os, c, indent + 1);
          }
        } else if constexpr (std::is_same_v<T, DFuncId>) {
          os << " " << n.symbol;
          for (const auto& a : n.args)
            os << " " << print_expr1(a.expr, a.names);
        } else if constexpr (std::is_same_v<T, DFuncComp>) {
          os << " " << n.symbol << " [";
          for (size_t i = 0; i < n.phis.size(); ++i)
            os << (i ? ", " : "") << print_expr2(n.phis[i].expr, n.phis[i].names);
          os << "] [";
          for (size_t i = 0; i < n.psis.size(); ++i)
            os << (i ? ", " : "") << print_expr2(n.psis[i].expr, n.psis[i].names);
          os << "]";
        } else if constexpr (std::is_same_v<T, DNat>) {
          os << " " << n.cell;
          for (const auto& a : n.args)
            os << " " << print_expr2(a.expr, a.names);
        }
        os << ")";
      },
      d.node);
}

} // namespace

std::string serialize_script(const ProofScript& s) {
  std::ostringstream os;
  for (const auto& lm : s.lemmas) {
    os << "lemma " << lm.name << " [";
    for (size_t i = 0; i < lm.ctx.size(); ++i)
      os << (i ? ", " : "") << lm.var_names[i] << ":" << lm.ctx[i];
    os << "] :\n  " << print_expr2(lm.lhs, lm.var_names) << "\n  = "
       << print_expr2(lm.rhs, lm.var_names) << "\nby ";
    print_deriv(os, lm.proof, 1);
    os << "\n\n";
  }
  return os.str();
}

} // namespace graycal
