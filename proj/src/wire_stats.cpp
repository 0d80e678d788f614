// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/wire_stats.hpp"

namespace graycal {

WireTrace wire_stats(const Multigraph& mg, const OneCell& f) {
  WireTrace t;
  t.stage.reserve(f.cells.size() + 1);
  t.stage.emplace_back(f.source.size(), WireStat{1, 0});
  for (const auto& c : f.cells) {
    const auto& in = t.stage.back();
    std::vector<WireStat> out;
    size_t p = cell_prefix(c).size();
    out.insert(out.end(), in.begin(), in.begin() + static_cast<std::ptrdiff_t>(p));
    if (const auto* m = std::get_if<MultiarrowCell>(&c)) {
      size_t n = mg.arrow(m->arrow).inputs.size();
      WireStat o{1, 1};
      for (size_t i = p; i < p + n; ++i) {
        o.width += in[i].width;
        o.weight += in[i].weight;
      }
      out.push_back(o);
      out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(p + n), in.end());
    } else {
      const auto& x = std::get<CrossingCell>(c);
      size_t l = x.left.size(), r = x.right.size();
      // Widths follow the wires; each crossed wire's weight grows by its width.
      for (size_t i = p + l; i < p + l + r; ++i)
        out.push_back({in[i].width, in[i].weight + in[i].width});
      for (size_t i = p; i < p + l; ++i)
        out.push_back({in[i].width, in[i].weight + in[i].width});
      out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(p + l + r), in.end());
    }
    t.stage.push_back(std::move(out));
  }
  return t;
}

} // namespace graycal
