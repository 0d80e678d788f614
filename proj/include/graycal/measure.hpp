// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/wire_stats.hpp"

#include <string>

namespace graycal {

enum class Cmp { Less, Equal, Greater };

// Termination weight. Plain terms carry the total prefix weight; braided
// terms the lexicographically ordered vector (overbraid, crossing, prefix,
// trivial).
struct Measure {
  Mode mode = Mode::Plain;
  std::vector<Nat> comps; // size 1 (plain) or 4 (braided)

  bool operator==(const Measure&) const = default;
  std::string render() const;
};

// Sum over basic cells of the weight of the wires above the cell, taken at
// the cell's stage.
Nat prefix_weight(const Multigraph& mg, const OneCell& f);

// The N^4 weighting. Component 1 sums max(0, 2*Wd(right)-1) over crossings,
// component 2 sums Wd(left#right)*Wt(left#right) at each crossing's entry,
// component 3 is the prefix weight, component 4 counts trivial crossings.
Measure braided_measure(const Multigraph& mg, const OneCell& f);

Measure measure_of(const Multigraph& mg, const OneCell& f, Mode mode);

Cmp compare(const Measure& a, const Measure& b);

} // namespace graycal
