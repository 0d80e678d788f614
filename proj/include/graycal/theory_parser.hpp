// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/theory.hpp"

#include <optional>

namespace graycal {

struct TheoryParse {
  std::optional<Theory> theory;
  Diagnostics diags;
};

// Parses the .gth theory syntax:
//   theory NAME
//   object NAME
//   arrow NAME : OBJ* -> OBJ
//   cell NAME [v:OBJ, ...] : EXPR => EXPR
//   equation NAME [v:OBJ, ...] : EXPR2 = EXPR2
// Parsing is total: failures come back as diagnostics. A parsed theory has
// passed validate_theory.
TheoryParse parse_theory(const std::string& text);

} // namespace graycal
