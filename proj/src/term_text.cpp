// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/term_text.hpp"

#include "lexer.hpp"

#include <sstream>

namespace graycal {

namespace {

ObjSeq parse_objseq(Lexer& lx) {
  ObjSeq s;
  while (lx.at(Tok::Ident))
    s.push_back(lx.next().text);
  return s;
}

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

TermParse parse_term(const Multigraph& mg, const std::string& text) {
  Lexer lx(text);
  Diagnostics ds;
  if (lx.at_ident("id")) {
    lx.next();
    if (!expect(lx, Tok::LParen, "'('", ds))
      return {std::nullopt, ds};
    ObjSeq src = parse_objseq(lx);
    if (!expect(lx, Tok::RParen, "')'", ds) || !expect(lx, Tok::Eof, "end of term", ds))
      return {std::nullopt, ds};
    OneCell f = OneCell::identity(src);
    Diagnostics vs = validate(mg, f, Mode::Braided);
    ds.insert(ds.end(), vs.begin(), vs.end());
    if (!ds.empty())
      return {std::nullopt, ds};
    return {f, ds};
  }
  std::vector<BasicCell> cells;
  for (;;) {
    if (!expect(lx, Tok::LParen, "'('", ds))
      return {std::nullopt, ds};
    ObjSeq prefix = parse_objseq(lx);
    if (!expect(lx, Tok::RParen, "')'", ds))
      return {std::nullopt, ds};
    if (!lx.at(Tok::Ident)) {
      ds.push_back({lx.peek().line, lx.peek().col, "expected a cell name or 'x'"});
      return {std::nullopt, ds};
    }
    Token name = lx.next();
    if (name.text == "x" && lx.at(Tok::LBracket)) {
      lx.next();
      ObjSeq left = parse_objseq(lx);
      if (!expect(lx, Tok::Pipe, "'|'", ds))
        return {std::nullopt, ds};
      ObjSeq right = parse_objseq(lx);
      if (!expect(lx, Tok::RBracket, "']'", ds) || !expect(lx, Tok::LParen, "'('", ds))
        return {std::nullopt, ds};
      ObjSeq suffix = parse_objseq(lx);
      if (!expect(lx, Tok::RParen, "')'", ds))
        return {std::nullopt, ds};
      cells.push_back(CrossingCell{std::move(prefix), std::move(left), std::move(right),
                                   std::move(suffix)});
    } else {
      if (!expect(lx, Tok::LParen, "'('", ds))
        return {std::nullopt, ds};
      ObjSeq suffix = parse_objseq(lx);
      if (!expect(lx, Tok::RParen, "')'", ds))
        return {std::nullopt, ds};
      if (!mg.find_arrow(name.text)) {
        ds.push_back({name.line, name.col, "unknown arrow " + name.text});
        return {std::nullopt, ds};
      }
      cells.push_back(MultiarrowCell{std::move(prefix), name.text, std::move(suffix)});
    }
    if (lx.at(Tok::Semi)) {
      lx.next();
      continue;
    }
    break;
  }
  if (!expect(lx, Tok::Eof, "end of term", ds))
    return {std::nullopt, ds};
  OneCell f{cell_source(mg, cells.front()), std::move(cells)};
  Diagnostics vs = validate(mg, f, Mode::Braided);
  ds.insert(ds.end(), vs.begin(), vs.end());
  if (!ds.empty())
    return {std::nullopt, ds};
  return {f, ds};
}

std::string print_objseq(const ObjSeq& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ' ';
    out += s[i];
  }
  return out;
}

std::string print_term(const OneCell& f) {
  if (f.cells.empty())
    return "id (" + print_objseq(f.source) + ")";
  std::ostringstream os;
  for (size_t i = 0; i < f.cells.size(); ++i) {
    if (i)
      os << "; ";
    const BasicCell& c = f.cells[i];
    os << "(" << print_objseq(cell_prefix(c)) << ") ";
    if (const auto* m = std::get_if<MultiarrowCell>(&c)) {
      os << m->arrow;
    } else {
      const auto& x = std::get<CrossingCell>(c);
      os << "x [" << print_objseq(x.left) << " | " << print_objseq(x.right) << "]";
    }
    os << " (" << print_objseq(cell_suffix(c)) << ")";
  }
  return os.str();
}

} // namespace graycal
