// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/onecell.hpp"

#include <functional>
#include <random>

namespace graycal {

// Bounds for exhaustive term enumeration. Widths have to be capped: a single
// crossing admits arbitrarily wide blocks.
struct EnumLimits {
  size_t max_cells = 3;
  size_t max_width = 4;      // applies to the source and to every later stage
  size_t max_block = SIZE_MAX; // cap on each crossing block
  bool canonical_colors = false; // enumerate sources up to object renaming
};

// Yields every term over mg within the limits, in a deterministic order,
// including identities. Crossings are generated only in braided mode.
void enumerate_terms(const Multigraph& mg, Mode mode, const EnumLimits& limits,
                     const std::function<void(const OneCell&)>& yield);

// A uniformly grown random valid term; stops early when no cell applies.
OneCell random_term(const Multigraph& mg, Mode mode, std::mt19937_64& rng,
                    size_t max_cells, size_t max_width);

} // namespace graycal
