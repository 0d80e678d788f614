// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/diagnostics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace graycal {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Colon,
  Arrow,    // ->
  DArrow,   // =>
  Equals,   // =
  Pipe,     // |
  Turnstile, // |-
  Eof,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  int line = 1;
  int col = 1;
};

// Shared tokeniser for the theory, term and proof-script grammars.
// Identifiers may contain '-' except where it would swallow an "->".
// '#' starts a line comment.
class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at(Tok k) const { return tok_.kind == k; }
  bool at_ident(std::string_view s) const { return tok_.kind == Tok::Ident && tok_.text == s; }

  const Diagnostics& diagnostics() const { return diags_; }

private:
  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
  }

  char cur() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char lookahead(size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void bump() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    for (;;) {
      while (cur() == ' ' || cur() == '\t' || cur() == '\r' || cur() == '\n')
        bump();
      if (cur() == '#') {
        while (cur() != '\n' && cur() != '\0')
          bump();
        continue;
      }
      break;
    }
    tok_ = Token{Tok::Eof, "", line_, col_};
    char c = cur();
    if (c == '\0')
      return;
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      bump();
    };
    switch (c) {
    case '(': single(Tok::LParen); return;
    case ')': single(Tok::RParen); return;
    case '[': single(Tok::LBracket); return;
    case ']': single(Tok::RBracket); return;
    case ';': single(Tok::Semi); return;
    case ',': single(Tok::Comma); return;
    case ':': single(Tok::Colon); return;
    case '|':
      if (lookahead(1) == '-') {
        tok_.kind = Tok::Turnstile;
        tok_.text = "|-";
        bump();
        bump();
      } else {
        single(Tok::Pipe);
      }
      return;
    case '=':
      if (lookahead(1) == '>') {
        tok_.kind = Tok::DArrow;
        tok_.text = "=>";
        bump();
        bump();
      } else {
        single(Tok::Equals);
      }
      return;
    case '-':
      if (lookahead(1) == '>') {
        tok_.kind = Tok::Arrow;
        tok_.text = "->";
        bump();
        bump();
        return;
      }
      break;
    default:
      break;
    }
    if (ident_start(c)) {
      tok_.kind = Tok::Ident;
      while (ident_char(cur()) || (cur() == '-' && lookahead(1) != '>' && ident_char(lookahead(1)))) {
        tok_.text += cur();
        bump();
      }
      return;
    }
    diags_.push_back({line_, col_, std::string("unexpected character '") + c + "'"});
    bump();
    advance();
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
  Diagnostics diags_;
};

} // namespace graycal
