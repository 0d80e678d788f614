// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/render.hpp"

#include <sstream>

namespace graycal {

namespace {

std::string centered(const std::string& s, size_t width, char fill) {
  if (s.size() >= width)
    return s;
  size_t total = width - s.size();
  size_t left = total / 2;
  return std::string(left, fill) + s + std::string(total - left, fill);
}

} // namespace

std::string render_ascii(const Multigraph& mg, const OneCell& f) {
  std::vector<ObjSeq> st = stages(mg, f);
  size_t w = 3;
  for (const auto& s : st)
    for (const auto& o : s)
      w = std::max(w, o.size() + 2);

  std::ostringstream os;
  auto labels = [&](const ObjSeq& s) {
    std::string line;
    for (const auto& o : s)
      line += centered(o, w, ' ');
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    os << line << "\n";
  };

  labels(st[0]);
  for (size_t i = 0; i < f.cells.size(); ++i) {
    const BasicCell& c = f.cells[i];
    size_t pre = cell_prefix(c).size();
    size_t ins = cell_inputs(mg, c).size();
    size_t total = st[i].size();
    std::string line;
    for (size_t k = 0; k < pre; ++k)
      line += centered("|", w, ' ');
    if (const auto* m = std::get_if<MultiarrowCell>(&c)) {
      std::string box = "[" + m->arrow + "]";
      if (ins == 0)
        line += box; // a nullary arrow springs up between wires
      else if (ins == 1)
        line += centered(box, w, ' ');
      else
        line += centered(box, ins * w, '-');
    } else {
      line += centered("X", ins * w, '=');
    }
    for (size_t k = pre + ins; k < total; ++k)
      line += centered("|", w, ' ');
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    os << line << "\n";
  }
  if (!f.cells.empty())
    labels(st.back());
  return os.str();
}

} // namespace graycal
