// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/measure.hpp"

#include <sstream>

namespace graycal {

std::string Measure::render() const {
  std::ostringstream os;
  if (mode == Mode::Plain) {
    os << comps[0];
  } else {
    os << "(" << comps[0] << ", " << comps[1] << ", " << comps[2] << ", " << comps[3] << ")";
  }
  return os.str();
}

Nat prefix_weight(const Multigraph& mg, const OneCell& f) {
  WireTrace t = wire_stats(mg, f);
  Nat total = 0;
  for (size_t i = 0; i < f.cells.size(); ++i)
    total += total_weight(t.at(i), 0, cell_prefix(f.cells[i]).size());
  return total;
}

Measure braided_measure(const Multigraph& mg, const OneCell& f) {
  WireTrace t = wire_stats(mg, f);
  Nat overbraid = 0, crossing = 0, prefix = 0, trivial = 0;
  for (size_t i = 0; i < f.cells.size(); ++i) {
    const auto& ws = t.at(i);
    const BasicCell& c = f.cells[i];
    size_t p = cell_prefix(c).size();
    prefix += total_weight(ws, 0, p);
    if (const auto* x = std::get_if<CrossingCell>(&c)) {
      size_t l = x->left.size(), r = x->right.size();
      Nat wd_r = total_width(ws, p + l, p + l + r);
      if (wd_r > 0)
        overbraid += 2 * wd_r - 1;
      crossing += total_width(ws, p, p + l + r) * total_weight(ws, p, p + l + r);
      if (x->trivial())
        trivial += 1;
    }
  }
  return Measure{Mode::Braided, {overbraid, crossing, prefix, trivial}};
}

Measure measure_of(const Multigraph& mg, const OneCell& f, Mode mode) {
  if (mode == Mode::Plain)
    return Measure{Mode::Plain, {prefix_weight(mg, f)}};
  return braided_measure(mg, f);
}

Cmp compare(const Measure& a, const Measure& b) {
  if (a.mode != b.mode)
    throw GrayError("compare: measure mode mismatch");
  for (size_t i = 0; i < a.comps.size(); ++i) {
    if (a.comps[i] < b.comps[i])
      return Cmp::Less;
    if (a.comps[i] > b.comps[i])
      return Cmp::Greater;
  }
  return Cmp::Equal;
}

} // namespace graycal
