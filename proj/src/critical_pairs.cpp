// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/critical_pairs.hpp"

#include "graycal/term_text.hpp"

#include <sstream>

namespace graycal {

std::string CriticalPairReport::render() const {
  std::ostringstream os;
  os << "terms: " << terms << "\n";
  os << "peaks: " << peaks << "\n";
  os << "max join length: " << max_join_length << "\n";
  if (failures.empty()) {
    os << "all peaks join\n";
  } else {
    os << failures.size() << " peaks FAILED to join";
    size_t shown = std::min<size_t>(failures.size(), 8);
    os << (failures.size() > shown ? ", first " + std::to_string(shown) + ":" : ":") << "\n";
    for (size_t i = 0; i < shown; ++i) {
      const auto& p = failures[i];
      os << "  term " << print_term(p.term) << "\n";
      os << "    " << to_string(p.left.kind) << "@" << p.left.index << " vs "
         << to_string(p.right.kind) << "@" << p.right.index << "\n";
      os << "    nf(left)  = " << print_term(p.nf_left) << "\n";
      os << "    nf(right) = " << print_term(p.nf_right) << "\n";
    }
  }
  return os.str();
}

CriticalPairReport critical_pairs(const Multigraph& mg, Mode mode, const EnumLimits& limits) {
  CriticalPairReport rep;
  enumerate_terms(mg, mode, limits, [&](const OneCell& t) {
    ++rep.terms;
    std::vector<Redex> rs = find_redexes(mg, t, mode);
    if (rs.size() < 2)
      return;
    for (size_t i = 0; i < rs.size(); ++i) {
      OneCell a = apply_redex(mg, t, rs[i]).first;
      NormalizeResult na = normalize(mg, a, mode);
      for (size_t j = i + 1; j < rs.size(); ++j) {
        ++rep.peaks;
        OneCell b = apply_redex(mg, t, rs[j]).first;
        NormalizeResult nb = normalize(mg, b, mode);
        size_t len = 2 + na.path.size() + nb.path.size();
        rep.max_join_length = std::max(rep.max_join_length, len);
        if (!(na.nf == nb.nf))
          rep.failures.push_back({t, rs[i], rs[j], na.nf, nb.nf});
      }
    }
  });
  return rep;
}

} // namespace graycal
