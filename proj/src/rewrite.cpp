// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/rewrite.hpp"

#include <cassert>

namespace graycal {

std::string to_string(RedexKind k) {
  switch (k) {
  case RedexKind::Interchange: return "interchange";
  case RedexKind::UnitElim: return "unit";
  case RedexKind::Overbraid: return "overbraid";
  case RedexKind::Underbraid: return "underbraid";
  case RedexKind::Pseudonat: return "pseudonat";
  }
  return "?";
}

RewriteStep reversed(const RewriteStep& s) {
  return RewriteStep{s.redex, !s.inverse, s.after, s.before};
}

RewritePath reversed(const RewritePath& p) {
  RewritePath r;
  r.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    r.push_back(reversed(*it));
  return r;
}

namespace {

struct CellView {
  const BasicCell* cell;
  ObjSeq inputs, outputs;
  size_t pre, suf;

  size_t in_begin() const { return pre; }
  size_t in_end() const { return pre + inputs.size(); }
  size_t out_begin() const { return pre; }
  size_t out_end() const { return pre + outputs.size(); }
};

CellView view(const Multigraph& mg, const BasicCell& c) {
  return CellView{&c, cell_inputs(mg, c), cell_outputs(mg, c),
                  cell_prefix(c).size(), cell_suffix(c).size()};
}

// A basic cell may sink past a crossing when both its sides are nonempty;
// trivial crossings are handled by the unit rule instead.
bool pseudonat_movable(const BasicCell& c) {
  if (const auto* x = std::get_if<CrossingCell>(&c))
    return !x->left.empty() && !x->right.empty();
  return true;
}

} // namespace

std::vector<Redex> find_redexes(const Multigraph& mg, const OneCell& f, Mode mode) {
  std::vector<Redex> out;
  const auto& cells = f.cells;
  for (size_t i = 0; i < cells.size(); ++i) {
    const BasicCell& c = cells[i];
    CellView vc = view(mg, c);
    // Interchange: this cell acts strictly above the next one.
    if (i + 1 < cells.size()) {
      CellView vn = view(mg, cells[i + 1]);
      if (vc.out_end() <= vn.in_begin())
        out.push_back({i, RedexKind::Interchange, 0});
    }
    if (mode == Mode::Plain)
      continue;
    const auto* x = std::get_if<CrossingCell>(&c);
    if (x && x->trivial())
      out.push_back({i, RedexKind::UnitElim, 0});
    if (x && i + 1 < cells.size()) {
      if (const auto* y = std::get_if<CrossingCell>(&cells[i + 1])) {
        // Overbraid: [b_{B,C} at X#A ; b_{A,C} at X] with A, B, C nonempty.
        if (y->prefix.size() < x->prefix.size() &&
            slice(x->prefix, 0, y->prefix.size()) == y->prefix &&
            slice(x->prefix, y->prefix.size(), x->prefix.size()) == y->left &&
            x->right == y->right && !x->left.empty() && !x->right.empty())
          out.push_back({i, RedexKind::Overbraid, 0});
      }
    }
    if (x && !x->left.empty())
      for (size_t s = 1; s < x->right.size(); ++s)
        out.push_back({i, RedexKind::Underbraid, s});
    if (i + 1 < cells.size() && pseudonat_movable(c)) {
      if (const auto* y = std::get_if<CrossingCell>(&cells[i + 1])) {
        size_t a = vc.out_begin(), b = vc.out_end();
        size_t u0 = y->prefix.size(), u1 = u0 + y->left.size(), v1 = u1 + y->right.size();
        bool in_left = u0 <= a && b <= u1 && !y->right.empty();
        bool in_right = u1 <= a && b <= v1 && !y->left.empty();
        if (in_left || in_right)
          out.push_back({i, RedexKind::Pseudonat, 0});
      }
    }
  }
  return out;
}

std::pair<OneCell, RewriteStep> apply_redex(const Multigraph& mg, const OneCell& f,
                                            const Redex& r) {
  const auto& cells = f.cells;
  auto fail = [&] { throw GrayError("apply: not a redex (" + to_string(r.kind) + " at " +
                                    std::to_string(r.index) + ")"); };
  if (r.index >= cells.size())
    fail();
  OneCell out = f;
  size_t i = r.index;
  switch (r.kind) {
  case RedexKind::Interchange: {
    if (i + 1 >= cells.size())
      fail();
    CellView vx = view(mg, cells[i]);
    CellView vy = view(mg, cells[i + 1]);
    if (vx.out_end() > vy.in_begin())
      fail();
    const ObjSeq& py = cell_prefix(cells[i + 1]);
    ObjSeq between = slice(py, vx.out_end(), py.size());
    ObjSeq px = cell_prefix(cells[i]);
    out.cells[i] = with_prefix_suffix(cells[i + 1], concat(px, vx.inputs, between),
                                      cell_suffix(cells[i + 1]));
    out.cells[i + 1] = with_prefix_suffix(
        cells[i], px, concat(between, vy.outputs, cell_suffix(cells[i + 1])));
    break;
  }
  case RedexKind::UnitElim: {
    const auto* x = std::get_if<CrossingCell>(&cells[i]);
    if (!x || !x->trivial())
      fail();
    out.cells.erase(out.cells.begin() + static_cast<std::ptrdiff_t>(i));
    break;
  }
  case RedexKind::Overbraid: {
    if (i + 1 >= cells.size())
      fail();
    const auto* x = std::get_if<CrossingCell>(&cells[i]);
    const auto* y = std::get_if<CrossingCell>(&cells[i + 1]);
    if (!x || !y || y->prefix.size() >= x->prefix.size() ||
        slice(x->prefix, 0, y->prefix.size()) != y->prefix ||
        slice(x->prefix, y->prefix.size(), x->prefix.size()) != y->left ||
        x->right != y->right || x->left.empty() || x->right.empty())
      fail();
    CrossingCell merged{y->prefix, concat(y->left, x->left), x->right, x->suffix};
    out.cells[i] = merged;
    out.cells.erase(out.cells.begin() + static_cast<std::ptrdiff_t>(i + 1));
    break;
  }
  case RedexKind::Underbraid: {
    const auto* x = std::get_if<CrossingCell>(&cells[i]);
    if (!x || x->left.empty() || r.split < 1 || r.split >= x->right.size())
      fail();
    ObjSeq b = slice(x->right, 0, r.split);
    ObjSeq c = slice(x->right, r.split, x->right.size());
    CrossingCell first{x->prefix, x->left, b, concat(c, x->suffix)};
    CrossingCell second{concat(x->prefix, b), x->left, c, x->suffix};
    out.cells[i] = first;
    out.cells.insert(out.cells.begin() + static_cast<std::ptrdiff_t>(i + 1), second);
    break;
  }
  case RedexKind::Pseudonat: {
    if (i + 1 >= cells.size() || !pseudonat_movable(cells[i]))
      fail();
    const auto* y = std::get_if<CrossingCell>(&cells[i + 1]);
    if (!y)
      fail();
    CellView vc = view(mg, cells[i]);
    size_t a = vc.out_begin(), b = vc.out_end();
    size_t u0 = y->prefix.size(), u1 = u0 + y->left.size(), v1 = u1 + y->right.size();
    if (u0 <= a && b <= u1 && !y->right.empty()) {
      ObjSeq l1 = slice(y->left, 0, a - u0);
      ObjSeq l2 = slice(y->left, b - u0, y->left.size());
      out.cells[i] = CrossingCell{y->prefix, concat(l1, vc.inputs, l2), y->right, y->suffix};
      out.cells[i + 1] = with_prefix_suffix(cells[i], concat(y->prefix, y->right, l1),
                                            concat(l2, y->suffix));
    } else if (u1 <= a && b <= v1 && !y->left.empty()) {
      ObjSeq r1 = slice(y->right, 0, a - u1);
      ObjSeq r2 = slice(y->right, b - u1, y->right.size());
      out.cells[i] = CrossingCell{y->prefix, y->left, concat(r1, vc.inputs, r2), y->suffix};
      out.cells[i + 1] = with_prefix_suffix(cells[i], concat(y->prefix, r1),
                                            concat(r2, y->left, y->suffix));
    } else {
      fail();
    }
    break;
  }
  }
  assert(boundary(mg, out) == boundary(mg, f));
  RewriteStep step{r, false, f, out};
  return {std::move(out), std::move(step)};
}

std::pair<OneCell, RewriteStep> apply_inverse_interchange(const Multigraph& mg,
                                                          const OneCell& f, size_t i) {
  if (i + 1 >= f.cells.size())
    throw GrayError("inverse interchange: index out of range");
  const BasicCell& x = f.cells[i];
  const BasicCell& y = f.cells[i + 1];
  CellView vy = view(mg, y);
  const ObjSeq& p_x = cell_prefix(x);
  if (vy.in_end() > p_x.size())
    throw GrayError("inverse interchange: cells are not disjoint below-above");
  ObjSeq between = slice(p_x, vy.in_end(), p_x.size());
  OneCell out = f;
  out.cells[i] = with_prefix_suffix(y, cell_prefix(y),
                                    concat(between, cell_inputs(mg, x), cell_suffix(x)));
  out.cells[i + 1] =
      with_prefix_suffix(x, concat(cell_prefix(y), vy.outputs, between), cell_suffix(x));
  Redex r{i, RedexKind::Interchange, 0};
  assert(apply_redex(mg, out, r).first == f);
  RewriteStep step{r, true, f, out};
  return {std::move(out), std::move(step)};
}

NormalizeResult normalize_with(const Multigraph& mg, const OneCell& f, Mode mode,
                               const Strategy& pick) {
  NormalizeResult res{f, {}};
  for (;;) {
    std::vector<Redex> rs = find_redexes(mg, res.nf, mode);
    if (rs.empty())
      return res;
    size_t k = pick ? pick(rs, res.nf) : 0;
    auto [next, step] = apply_redex(mg, res.nf, rs.at(k));
    res.path.push_back(std::move(step));
    res.nf = std::move(next);
  }
}

NormalizeResult normalize(const Multigraph& mg, const OneCell& f, Mode mode) {
  return normalize_with(mg, f, mode, {});
}

std::optional<RewritePath> decide_equal(const Multigraph& mg, const OneCell& f,
                                        const OneCell& g, Mode mode) {
  if (boundary(mg, f) != boundary(mg, g))
    throw GrayError("decide: boundary mismatch");
  NormalizeResult nf = normalize(mg, f, mode);
  NormalizeResult ng = normalize(mg, g, mode);
  if (!(nf.nf == ng.nf))
    return std::nullopt;
  RewritePath path = std::move(nf.path);
  RewritePath back = reversed(ng.path);
  path.insert(path.end(), back.begin(), back.end());
  return path;
}

} // namespace graycal
