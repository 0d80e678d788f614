// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/multigraph.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace graycal {

// A finite sequence of object wires; the empty sequence is the unit object.
using ObjSeq = std::vector<std::string>;

ObjSeq concat(const ObjSeq& a, const ObjSeq& b);
ObjSeq concat(const ObjSeq& a, const ObjSeq& b, const ObjSeq& c);
ObjSeq slice(const ObjSeq& s, size_t begin, size_t end);

enum class Mode { Plain, Braided };

// One generator arrow with bare wires above (prefix) and below (suffix).
struct MultiarrowCell {
  ObjSeq prefix;
  std::string arrow;
  ObjSeq suffix;

  bool operator==(const MultiarrowCell&) const = default;
};

// A positive crossing of two adjacent wire blocks: left crosses over right,
// so left#right becomes right#left. Not both blocks may be empty.
struct CrossingCell {
  ObjSeq prefix;
  ObjSeq left;
  ObjSeq right;
  ObjSeq suffix;

  bool operator==(const CrossingCell&) const = default;

  bool trivial() const { return left.empty() || right.empty(); }
};

using BasicCell = std::variant<MultiarrowCell, CrossingCell>;

inline bool is_crossing(const BasicCell& c) { return std::holds_alternative<CrossingCell>(c); }

// The wires a cell reads, excluding prefix and suffix.
ObjSeq cell_inputs(const Multigraph& mg, const BasicCell& c);
// The wires a cell writes in their place.
ObjSeq cell_outputs(const Multigraph& mg, const BasicCell& c);
// Full wire sequences before and after the cell acts.
ObjSeq cell_source(const Multigraph& mg, const BasicCell& c);
ObjSeq cell_target(const Multigraph& mg, const BasicCell& c);

const ObjSeq& cell_prefix(const BasicCell& c);
const ObjSeq& cell_suffix(const BasicCell& c);
BasicCell with_prefix_suffix(const BasicCell& c, ObjSeq prefix, ObjSeq suffix);

// A 1-cell of the free (braided) Gray monoid: a composable sequence of basic
// cells. `source` fixes the boundary even when `cells` is empty.
struct OneCell {
  ObjSeq source;
  std::vector<BasicCell> cells;

  bool operator==(const OneCell&) const = default;

  static OneCell identity(ObjSeq objs) { return OneCell{std::move(objs), {}}; }
};

struct Boundary {
  ObjSeq source;
  ObjSeq target;

  bool operator==(const Boundary&) const = default;
};

// All wire sequences of f, stage by stage: stages()[0] is the source and
// stages()[i+1] the result of cell i.
std::vector<ObjSeq> stages(const Multigraph& mg, const OneCell& f);

Boundary boundary(const Multigraph& mg, const OneCell& f);

// Sequential composition; requires target(f) = source(g).
OneCell compose(const Multigraph& mg, const OneCell& f, const OneCell& g);

// pre # f # suf, extending every cell's prefix and suffix.
OneCell whisker(const ObjSeq& pre, const OneCell& f, const ObjSeq& suf);

// f # g, decomposed left-cell-first: all of f suffixed by source(g), then all
// of g prefixed by target(f).
OneCell tensor(const Multigraph& mg, const OneCell& f, const OneCell& g);

// Checks every structural invariant; plain mode additionally rejects
// crossings. Reports problems instead of throwing.
Diagnostics validate(const Multigraph& mg, const OneCell& f, Mode mode);

} // namespace graycal
