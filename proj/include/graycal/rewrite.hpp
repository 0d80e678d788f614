// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/onecell.hpp"

#include <functional>
#include <optional>

namespace graycal {

enum class RedexKind { Interchange, UnitElim, Overbraid, Underbraid, Pseudonat };

std::string to_string(RedexKind k);

// A rule application site. `index` addresses the first cell involved;
// `split` is meaningful for Underbraid only (1 <= split < |right|).
struct Redex {
  size_t index = 0;
  RedexKind kind = RedexKind::Interchange;
  size_t split = 0;

  bool operator==(const Redex&) const = default;
};

// One signed rewrite. For a forward step, `after` = apply(`before`, redex);
// for an inverse step the redex belongs to `after` and applying it there
// yields `before`.
struct RewriteStep {
  Redex redex;
  bool inverse = false;
  OneCell before;
  OneCell after;
};

using RewritePath = std::vector<RewriteStep>;

RewriteStep reversed(const RewriteStep& s);
RewritePath reversed(const RewritePath& p);

// Complete, deterministically ordered enumeration: ascending index, then
// Interchange < UnitElim < Overbraid < Underbraid < Pseudonat, then
// ascending split.
std::vector<Redex> find_redexes(const Multigraph& mg, const OneCell& f, Mode mode);

// Applies one forward step; the result has the same boundary.
std::pair<OneCell, RewriteStep> apply_redex(const Multigraph& mg, const OneCell& f, const Redex& r);

// Applies a negative interchange at i: cell i must act strictly below cell
// i+1. The recorded redex belongs to the result, where it is forward.
std::pair<OneCell, RewriteStep> apply_inverse_interchange(const Multigraph& mg,
                                                          const OneCell& f, size_t i);

struct NormalizeResult {
  OneCell nf;
  RewritePath path; // forward path f => nf
};

// Picks a redex among those of a term; nullopt means "first".
using Strategy = std::function<size_t(const std::vector<Redex>&, const OneCell&)>;

NormalizeResult normalize(const Multigraph& mg, const OneCell& f, Mode mode);
NormalizeResult normalize_with(const Multigraph& mg, const OneCell& f, Mode mode,
                               const Strategy& pick);

// The coherence decision procedure: there is a (then unique) 2-cell f => g
// exactly when the normal forms coincide; the witness is the zig-zag
// forward(f => nf) followed by the reversal of forward(g => nf).
std::optional<RewritePath> decide_equal(const Multigraph& mg, const OneCell& f,
                                        const OneCell& g, Mode mode);

} // namespace graycal
