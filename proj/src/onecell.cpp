// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/onecell.hpp"

#include <sstream>

namespace graycal {

ObjSeq concat(const ObjSeq& a, const ObjSeq& b) {
  ObjSeq r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

ObjSeq concat(const ObjSeq& a, const ObjSeq& b, const ObjSeq& c) {
  ObjSeq r = concat(a, b);
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

ObjSeq slice(const ObjSeq& s, size_t begin, size_t end) {
  return ObjSeq(s.begin() + static_cast<std::ptrdiff_t>(begin),
                s.begin() + static_cast<std::ptrdiff_t>(end));
}

ObjSeq cell_inputs(const Multigraph& mg, const BasicCell& c) {
  if (const auto* m = std::get_if<MultiarrowCell>(&c))
    return mg.arrow(m->arrow).inputs;
  const auto& x = std::get<CrossingCell>(c);
  return concat(x.left, x.right);
}

ObjSeq cell_outputs(const Multigraph& mg, const BasicCell& c) {
  if (const auto* m = std::get_if<MultiarrowCell>(&c))
    return {mg.arrow(m->arrow).output};
  const auto& x = std::get<CrossingCell>(c);
  return concat(x.right, x.left);
}

ObjSeq cell_source(const Multigraph& mg, const BasicCell& c) {
  return concat(cell_prefix(c), cell_inputs(mg, c), cell_suffix(c));
}

ObjSeq cell_target(const Multigraph& mg, const BasicCell& c) {
  return concat(cell_prefix(c), cell_outputs(mg, c), cell_suffix(c));
}

const ObjSeq& cell_prefix(const BasicCell& c) {
  if (const auto* m = std::get_if<MultiarrowCell>(&c))
    return m->prefix;
  return std::get<CrossingCell>(c).prefix;
}

const ObjSeq& cell_suffix(const BasicCell& c) {
  if (const auto* m = std::get_if<MultiarrowCell>(&c))
    return m->suffix;
  return std::get<CrossingCell>(c).suffix;
}

BasicCell with_prefix_suffix(const BasicCell& c, ObjSeq prefix, ObjSeq suffix) {
  if (const auto* m = std::get_if<MultiarrowCell>(&c))
    return MultiarrowCell{std::move(prefix), m->arrow, std::move(suffix)};
  const auto& x = std::get<CrossingCell>(c);
  return CrossingCell{std::move(prefix), x.left, x.right, std::move(suffix)};
}

std::vector<ObjSeq> stages(const Multigraph& mg, const OneCell& f) {
  std::vector<ObjSeq> out;
  out.reserve(f.cells.size() + 1);
  out.push_back(f.source);
  for (const auto& c : f.cells)
    out.push_back(cell_target(mg, c));
  return out;
}

Boundary boundary(const Multigraph& mg, const OneCell& f) {
  if (f.cells.empty())
    return {f.source, f.source};
  return {f.source, cell_target(mg, f.cells.back())};
}

static std::string show_seq(const ObjSeq& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.size(); ++i)
    os << (i ? " " : "") << s[i];
  os << ")";
  return os.str();
}

OneCell compose(const Multigraph& mg, const OneCell& f, const OneCell& g) {
  Boundary bf = boundary(mg, f);
  if (bf.target != g.source)
    throw GrayError("compose: boundary mismatch, " + show_seq(bf.target) +
                    " vs " + show_seq(g.source));
  OneCell r = f;
  r.cells.insert(r.cells.end(), g.cells.begin(), g.cells.end());
  return r;
}

OneCell whisker(const ObjSeq& pre, const OneCell& f, const ObjSeq& suf) {
  OneCell r;
  r.source = concat(pre, f.source, suf);
  r.cells.reserve(f.cells.size());
  for (const auto& c : f.cells)
    r.cells.push_back(with_prefix_suffix(c, concat(pre, cell_prefix(c)),
                                         concat(cell_suffix(c), suf)));
  return r;
}

OneCell tensor(const Multigraph& mg, const OneCell& f, const OneCell& g) {
  Boundary bf = boundary(mg, f);
  return compose(mg, whisker({}, f, g.source), whisker(bf.target, g, {}));
}

Diagnostics validate(const Multigraph& mg, const OneCell& f, Mode mode) {
  Diagnostics ds;
  auto check_objs = [&](const ObjSeq& s, const std::string& where) {
    for (const auto& o : s)
      if (!mg.has_object(o))
        ds.push_back({0, 0, "unknown object " + o + " in " + where});
  };
  check_objs(f.source, "source");
  ObjSeq cur = f.source;
  for (size_t i = 0; i < f.cells.size(); ++i) {
    const BasicCell& c = f.cells[i];
    std::string where = "cell " + std::to_string(i);
    check_objs(cell_prefix(c), where);
    check_objs(cell_suffix(c), where);
    if (const auto* m = std::get_if<MultiarrowCell>(&c)) {
      if (!mg.find_arrow(m->arrow)) {
        ds.push_back({0, 0, "unknown arrow " + m->arrow + " in " + where});
        return ds;
      }
    } else {
      const auto& x = std::get<CrossingCell>(c);
      check_objs(x.left, where);
      check_objs(x.right, where);
      if (mode == Mode::Plain)
        ds.push_back({0, 0, "crossing in plain mode at " + where});
      if (x.left.empty() && x.right.empty())
        ds.push_back({0, 0, "empty crossing at " + where});
    }
    if (!ds.empty())
      return ds;
    ObjSeq src = cell_source(mg, c);
    if (src != cur) {
      ds.push_back({0, 0, "composability failure at " + where + ": expects " +
                              show_seq(src) + " but gets " + show_seq(cur)});
      return ds;
    }
    cur = cell_target(mg, c);
  }
  return ds;
}

} // namespace graycal
