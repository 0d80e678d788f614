// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/derivation.hpp"

#include <optional>

namespace graycal {

struct ScriptParse {
  std::optional<ProofScript> script;
  Diagnostics diags;
};

// Parses the .gpf proof-script syntax:
//   lemma NAME [v:OBJ, ...] : EXPR2 = EXPR2 by DERIV
// with DERIV a parenthesised tree over the rule keywords
//   refl sym trans axiom comp-cong app-cong func-id func-comp unit-l unit-r nat
// Expression leaves may use any names declared by the enclosing lemma; each
// leaf's context is the subsequence it mentions, in first-use order.
ScriptParse parse_script(const std::string& text);

std::string serialize_script(const ProofScript& s);

} // namespace graycal
