// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/theory_parser.hpp"

#include "graycal/check.hpp"
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

std::optional<std::string> expect_name(Lexer& lx, const char* what, Diagnostics& ds) {
  if (lx.at(Tok::Ident))
    return lx.next().text;
  ds.push_back({lx.peek().line, lx.peek().col, std::string("expected ") + what});
  return std::nullopt;
}

// [v:OBJ, ...] possibly empty
bool parse_ctx(Lexer& lx, Diagnostics& ds, std::vector<std::string>& names, Context& objs) {
  if (!expect(lx, Tok::LBracket, "'['", ds))
    return false;
  if (!lx.at(Tok::RBracket)) {
    for (;;) {
      Token name = lx.peek();
      auto n = expect_name(lx, "a context name", ds);
      if (!n)
        return false;
      if (!expect(lx, Tok::Colon, "':'", ds))
        return false;
      auto o = expect_name(lx, "an object name", ds);
      if (!o)
        return false;
      for (const auto& prev : names)
        if (prev == *n)
          ds.push_back({name.line, name.col, "duplicate context name " + *n});
      names.push_back(*n);
      objs.push_back(*o);
      if (lx.at(Tok::Comma)) {
        lx.next();
        continue;
      }
      break;
    }
  }
  return expect(lx, Tok::RBracket, "']'", ds);
}

} // namespace

TheoryParse parse_theory(const std::string& text) {
  Lexer lx(text);
  Diagnostics ds;
  Theory t;
  bool named = false;
  while (!lx.at(Tok::Eof)) {
    if (!lx.at(Tok::Ident)) {
      ds.push_back({lx.peek().line, lx.peek().col,
                    "expected a declaration keyword, found '" + lx.peek().text + "'"});
      break;
    }
    Token kw = lx.next();
    if (kw.text == "theory") {
      auto n = expect_name(lx, "a theory name", ds);
      if (!n)
        break;
      if (named)
        ds.push_back({kw.line, kw.col, "theory name declared twice"});
      t.name = *n;
      named = true;
    } else if (kw.text == "object") {
      auto n = expect_name(lx, "an object name", ds);
      if (!n)
        break;
      t.base.objects.push_back(*n);
    } else if (kw.text == "arrow") {
      auto n = expect_name(lx, "an arrow name", ds);
      if (!n || !expect(lx, Tok::Colon, "':'", ds))
        break;
      ArrowSig a;
      a.name = *n;
      while (lx.at(Tok::Ident))
        a.inputs.push_back(lx.next().text);
      if (!expect(lx, Tok::Arrow, "'->'", ds))
        break;
      auto out = expect_name(lx, "an object name", ds);
      if (!out)
        break;
      a.output = *out;
      t.base.arrows.push_back(std::move(a));
    } else if (kw.text == "cell") {
      auto n = expect_name(lx, "a cell name", ds);
      if (!n)
        break;
      std::vector<std::string> names;
      Context objs;
      if (!parse_ctx(lx, ds, names, objs) || !expect(lx, Tok::Colon, "':'", ds))
        break;
      auto l = parse_sexpr1(lx, ds);
      if (!l || !expect(lx, Tok::DArrow, "'=>'", ds))
        break;
      auto r = parse_sexpr1(lx, ds);
      if (!r)
        break;
      Elaborator el(names, objs, /*first_use=*/false);
      auto le = el.run1(*l, ds);
      auto re = el.run1(*r, ds);
      if (!le || !re)
        break;
      t.cells.push_back(CellDecl{*n, objs, std::move(*le), std::move(*re), ""});
    } else if (kw.text == "equation") {
      auto n = expect_name(lx, "an equation name", ds);
      if (!n)
        break;
      std::vector<std::string> names;
      Context objs;
      if (!parse_ctx(lx, ds, names, objs) || !expect(lx, Tok::Colon, "':'", ds))
        break;
      auto l = parse_sexpr2(lx, ds);
      if (!l || !expect(lx, Tok::Equals, "'='", ds))
        break;
      auto r = parse_sexpr2(lx, ds);
      if (!r)
        break;
      Elaborator el(names, objs, /*first_use=*/false);
      auto le = el.run2(*l, ds);
      auto re = el.run2(*r, ds);
      if (!le || !re)
        break;
      t.equations.push_back(EqDecl{*n, objs, "", Expr1::var(0), Expr1::var(0),
                                   std::move(*le), std::move(*re)});
    } else {
      ds.push_back({kw.line, kw.col, "unknown declaration keyword " + kw.text});
      break;
    }
  }
  for (const auto& d : lx.diagnostics())
    ds.push_back(d);
  if (!ds.empty())
    return {std::nullopt, ds};

  // Fill in the derived boundary data, then re-validate the whole theory.
  for (auto& c : t.cells) {
    try {
      c.object = check_expr1(t, c.ctx, c.lhs);
    } catch (const CheckFailure&) {
      // validate_theory reports it with context
    }
  }
  for (auto& q : t.equations) {
    try {
      Boundary2 b = infer_expr2(t, q.ctx, q.lhs);
      q.object = b.object;
      q.src = b.src;
      q.tgt = b.tgt;
    } catch (const CheckFailure&) {
    }
  }
  Diagnostics vs = validate_theory(t);
  if (!vs.empty())
    return {std::nullopt, vs};
  return {t, {}};
}

} // namespace graycal
