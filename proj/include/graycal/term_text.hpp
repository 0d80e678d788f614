// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/onecell.hpp"

#include <optional>
#include <string>

namespace graycal {

// Concrete term syntax:
//   term   ::= "id" "(" objseq ")" | cell (";" cell)*
//   cell   ::= "(" objseq ")" NAME "(" objseq ")"
//            | "(" objseq ")" "x" "[" objseq "|" objseq "]" "(" objseq ")"
//   objseq ::= NAME*
// The source of a nonempty term is recovered from its first cell.
struct TermParse {
  std::optional<OneCell> term;
  Diagnostics diags;
};

TermParse parse_term(const Multigraph& mg, const std::string& text);

std::string print_term(const OneCell& f);
std::string print_objseq(const ObjSeq& s);

} // namespace graycal
