// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/nat.hpp"
#include "graycal/onecell.hpp"

namespace graycal {

struct WireStat {
  Nat width;  // 1 + sum of input widths under a multiarrow, preserved by crossings
  Nat weight; // 1 + sum of input weights under a multiarrow; crossings add the width

  bool operator==(const WireStat&) const = default;
};

// Per-stage, per-wire statistics. stages[0] is all (1, 0).
struct WireTrace {
  std::vector<std::vector<WireStat>> stage;

  const std::vector<WireStat>& at(size_t s) const { return stage.at(s); }
};

WireTrace wire_stats(const Multigraph& mg, const OneCell& f);

inline Nat total_width(const std::vector<WireStat>& ws, size_t begin, size_t end) {
  Nat n = 0;
  for (size_t i = begin; i < end; ++i)
    n += ws[i].width;
  return n;
}

inline Nat total_weight(const std::vector<WireStat>& ws, size_t begin, size_t end) {
  Nat n = 0;
  for (size_t i = begin; i < end; ++i)
    n += ws[i].weight;
  return n;
}

} // namespace graycal
