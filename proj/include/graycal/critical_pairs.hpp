// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/enumerate.hpp"
#include "graycal/rewrite.hpp"

namespace graycal {

struct Peak {
  OneCell term;
  Redex left, right;
  OneCell nf_left, nf_right; // filled for failures
};

struct CriticalPairReport {
  size_t terms = 0;
  size_t peaks = 0;
  size_t max_join_length = 0;
  std::vector<Peak> failures;

  bool ok() const { return failures.empty(); }
  std::string render() const;
};

// Enumerates all terms within the limits, finds every peak (two distinct
// redexes of one term) and checks that both reducts share a normal form.
CriticalPairReport critical_pairs(const Multigraph& mg, Mode mode, const EnumLimits& limits);

} // namespace graycal
