// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/enumerate.hpp"

namespace graycal {

namespace {

// All cells applicable to the wire sequence `s`, deterministically ordered:
// multiarrows by (position, declaration), then crossings by (position, left
// size, right size).
std::vector<BasicCell> moves(const Multigraph& mg, Mode mode, const ObjSeq& s,
                             size_t max_width, size_t max_block) {
  std::vector<BasicCell> out;
  for (size_t p = 0; p <= s.size(); ++p) {
    for (const auto& a : mg.arrows) {
      if (p + a.inputs.size() > s.size())
        continue;
      if (slice(s, p, p + a.inputs.size()) != a.inputs)
        continue;
      if (s.size() - a.inputs.size() + 1 > max_width)
        continue;
      out.push_back(MultiarrowCell{slice(s, 0, p), a.name,
                                   slice(s, p + a.inputs.size(), s.size())});
    }
  }
  if (mode == Mode::Braided) {
    for (size_t p = 0; p < s.size(); ++p)
      for (size_t l = 0; p + l <= s.size() && l <= max_block; ++l)
        for (size_t r = l == 0 ? 1 : 0; p + l + r <= s.size() && r <= max_block; ++r)
          out.push_back(CrossingCell{slice(s, 0, p), slice(s, p, p + l),
                                     slice(s, p + l, p + l + r),
                                     slice(s, p + l + r, s.size())});
  }
  return out;
}

void extend(const Multigraph& mg, Mode mode, const EnumLimits& lim, OneCell& t,
            const ObjSeq& stage, const std::function<void(const OneCell&)>& yield) {
  yield(t);
  if (t.cells.size() >= lim.max_cells)
    return;
  for (BasicCell& m : moves(mg, mode, stage, lim.max_width, lim.max_block)) {
    ObjSeq next = cell_target(mg, m);
    t.cells.push_back(std::move(m));
    extend(mg, mode, lim, t, next, yield);
    t.cells.pop_back();
  }
}

void sources(const Multigraph& mg, const EnumLimits& lim, size_t len, ObjSeq& cur,
             size_t colors_used, const std::function<void(const ObjSeq&)>& yield) {
  if (cur.size() == len) {
    yield(cur);
    return;
  }
  size_t n = lim.canonical_colors ? std::min(colors_used + 1, mg.objects.size())
                                  : mg.objects.size();
  for (size_t i = 0; i < n; ++i) {
    cur.push_back(mg.objects[i]);
    sources(mg, lim, len, cur, std::max(colors_used, i + 1), yield);
    cur.pop_back();
  }
}

} // namespace

void enumerate_terms(const Multigraph& mg, Mode mode, const EnumLimits& lim,
                     const std::function<void(const OneCell&)>& yield) {
  for (size_t len = 0; len <= lim.max_width; ++len) {
    ObjSeq cur;
    sources(mg, lim, len, cur, 0, [&](const ObjSeq& src) {
      OneCell t = OneCell::identity(src);
      extend(mg, mode, lim, t, src, yield);
    });
  }
}

OneCell random_term(const Multigraph& mg, Mode mode, std::mt19937_64& rng,
                    size_t max_cells, size_t max_width) {
  std::uniform_int_distribution<size_t> wd(0, max_width);
  ObjSeq src;
  size_t w = wd(rng);
  for (size_t i = 0; i < w; ++i)
    src.push_back(mg.objects[rng() % mg.objects.size()]);
  OneCell t = OneCell::identity(src);
  ObjSeq stage = src;
  size_t n = rng() % (max_cells + 1);
  for (size_t i = 0; i < n; ++i) {
    auto ms = moves(mg, mode, stage, max_width, max_width);
    if (ms.empty())
      break;
    BasicCell m = ms[rng() % ms.size()];
    stage = cell_target(mg, m);
    t.cells.push_back(std::move(m));
  }
  return t;
}

} // namespace graycal
