// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/oracle.hpp"

#include "graycal/term_text.hpp"

#include <deque>
#include <unordered_set>

namespace graycal {

std::vector<OneCell> successors(const Multigraph& mg, const OneCell& f, Mode mode) {
  std::vector<OneCell> out;
  for (const Redex& r : find_redexes(mg, f, mode))
    out.push_back(apply_redex(mg, f, r).first);
  return out;
}

namespace {

// Candidate predecessors are built per rule shape and then verified by
// re-applying the forward rule, so a sloppy condition here only costs time.
void candidates(const Multigraph& mg, const OneCell& f, Mode mode,
                std::vector<std::pair<OneCell, Redex>>& out) {
  const auto& cells = f.cells;
  std::vector<ObjSeq> st = stages(mg, f);

  // interchange: [x below; y above] came from swapping [y; x]
  for (size_t i = 0; i + 1 < cells.size(); ++i) {
    const BasicCell& x = cells[i];
    const BasicCell& y = cells[i + 1];
    ObjSeq in_x = cell_inputs(mg, x), out_y = cell_outputs(mg, y), in_y = cell_inputs(mg, y);
    const ObjSeq& p_x = cell_prefix(x);
    const ObjSeq& p_y = cell_prefix(y);
    if (p_y.size() + in_y.size() > p_x.size())
      continue;
    ObjSeq between = slice(p_x, p_y.size() + in_y.size(), p_x.size());
    OneCell cand = f;
    cand.cells[i] = with_prefix_suffix(y, p_y, concat(between, in_x, cell_suffix(x)));
    cand.cells[i + 1] = with_prefix_suffix(x, concat(p_y, out_y, between), cell_suffix(x));
    out.emplace_back(std::move(cand), Redex{i, RedexKind::Interchange, 0});
  }

  if (mode != Mode::Braided)
    return;

  // unit: insert a trivial crossing at any stage and position
  for (size_t k = 0; k < st.size(); ++k) {
    const ObjSeq& s = st[k];
    for (size_t p = 0; p < s.size(); ++p) {
      for (size_t len = 1; p + len <= s.size(); ++len) {
        for (int side = 0; side < 2; ++side) {
          ObjSeq block = slice(s, p, p + len);
          CrossingCell c{slice(s, 0, p), side ? ObjSeq{} : block,
                         side ? block : ObjSeq{}, slice(s, p + len, s.size())};
          OneCell cand = f;
          cand.cells.insert(cand.cells.begin() + static_cast<std::ptrdiff_t>(k), c);
          out.emplace_back(std::move(cand), Redex{k, RedexKind::UnitElim, 0});
        }
      }
    }
  }

  for (size_t i = 0; i < cells.size(); ++i) {
    const auto* x = std::get_if<CrossingCell>(&cells[i]);

    // overbraid: split the left block of a merged crossing
    if (x && x->left.size() >= 2 && !x->right.empty()) {
      for (size_t s = 1; s < x->left.size(); ++s) {
        ObjSeq a = slice(x->left, 0, s), b = slice(x->left, s, x->left.size());
        OneCell cand = f;
        cand.cells[i] = CrossingCell{concat(x->prefix, a), b, x->right, x->suffix};
        cand.cells.insert(cand.cells.begin() + static_cast<std::ptrdiff_t>(i + 1),
                          CrossingCell{x->prefix, a, x->right, concat(b, x->suffix)});
        out.emplace_back(std::move(cand), Redex{i, RedexKind::Overbraid, 0});
      }
    }

    // underbraid: merge two split crossings back into one
    if (x && i + 1 < cells.size()) {
      if (const auto* y = std::get_if<CrossingCell>(&cells[i + 1])) {
        if (y->left == x->left && y->prefix == concat(x->prefix, x->right) &&
            x->suffix == concat(y->right, y->suffix)) {
          OneCell cand = f;
          cand.cells[i] = CrossingCell{x->prefix, x->left, concat(x->right, y->right), y->suffix};
          cand.cells.erase(cand.cells.begin() + static_cast<std::ptrdiff_t>(i + 1));
          out.emplace_back(std::move(cand), Redex{i, RedexKind::Underbraid, x->right.size()});
        }
      }
    }

    // pseudonaturality: pull the trailing cell back through the crossing
    if (x && i + 1 < cells.size()) {
      const BasicCell& c = cells[i + 1];
      ObjSeq in_c = cell_inputs(mg, c), out_c = cell_outputs(mg, c);
      const ObjSeq& p_c = cell_prefix(c);
      const ObjSeq& s_c = cell_suffix(c);
      // left case: crossing's left block is U1 # in_c # U2
      if (p_c.size() >= x->prefix.size() + x->right.size() &&
          s_c.size() >= x->suffix.size()) {
        ObjSeq u1 = slice(p_c, x->prefix.size() + x->right.size(), p_c.size());
        ObjSeq u2 = slice(s_c, 0, s_c.size() - x->suffix.size());
        if (x->left == concat(u1, in_c, u2)) {
          OneCell cand = f;
          cand.cells[i] = with_prefix_suffix(c, concat(x->prefix, u1),
                                             concat(u2, x->right, x->suffix));
          cand.cells[i + 1] = CrossingCell{x->prefix, concat(u1, out_c, u2), x->right, x->suffix};
          out.emplace_back(std::move(cand), Redex{i, RedexKind::Pseudonat, 0});
        }
      }
      // right case: crossing's right block is V1 # in_c # V2
      if (p_c.size() >= x->prefix.size() &&
          s_c.size() >= x->left.size() + x->suffix.size()) {
        ObjSeq v1 = slice(p_c, x->prefix.size(), p_c.size());
        ObjSeq v2 = slice(s_c, 0, s_c.size() - x->left.size() - x->suffix.size());
        if (x->right == concat(v1, in_c, v2)) {
          OneCell cand = f;
          cand.cells[i] = with_prefix_suffix(c, concat(x->prefix, x->left, v1),
                                             concat(v2, x->suffix));
          cand.cells[i + 1] = CrossingCell{x->prefix, x->left, concat(v1, out_c, v2), x->suffix};
          out.emplace_back(std::move(cand), Redex{i, RedexKind::Pseudonat, 0});
        }
      }
    }
  }
}

} // namespace

std::vector<OneCell> predecessors(const Multigraph& mg, const OneCell& f, Mode mode) {
  std::vector<std::pair<OneCell, Redex>> cands;
  candidates(mg, f, mode, cands);
  std::vector<OneCell> out;
  for (auto& [cand, redex] : cands) {
    if (!validate(mg, cand, mode).empty())
      continue;
    bool ok = false;
    for (const Redex& r : find_redexes(mg, cand, mode)) {
      if (r == redex && apply_redex(mg, cand, r).first == f) {
        ok = true;
        break;
      }
    }
    if (ok)
      out.push_back(std::move(cand));
  }
  return out;
}

bool oracle_connected(const Multigraph& mg, const OneCell& f, const OneCell& g,
                      Mode mode, size_t bound, size_t max_visited) {
  if (boundary(mg, f) != boundary(mg, g))
    throw GrayError("oracle: boundary mismatch");
  if (f.cells.size() > bound || g.cells.size() > bound)
    throw GrayError("oracle: bound exceeded by input");
  if (f == g)
    return true;
  std::string goal = print_term(g);
  std::unordered_set<std::string> seen{print_term(f)};
  std::deque<OneCell> queue{f};
  size_t expanded = 0;
  while (!queue.empty()) {
    OneCell t = std::move(queue.front());
    queue.pop_front();
    if (++expanded > max_visited)
      throw GrayError("oracle: bound exceeded");
    std::vector<OneCell> nbrs = successors(mg, t, mode);
    std::vector<OneCell> preds = predecessors(mg, t, mode);
    nbrs.insert(nbrs.end(), preds.begin(), preds.end());
    for (OneCell& n : nbrs) {
      if (n.cells.size() > bound)
        continue;
      std::string key = print_term(n);
      if (key == goal)
        return true;
      if (seen.insert(std::move(key)).second)
        queue.push_back(std::move(n));
    }
  }
  return false;
}

} // namespace graycal
