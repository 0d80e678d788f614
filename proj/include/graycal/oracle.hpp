// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/rewrite.hpp"

namespace graycal {

// Terms one forward step away.
std::vector<OneCell> successors(const Multigraph& mg, const OneCell& f, Mode mode);

// Terms one inverse step away. Every candidate is verified by applying the
// matching forward redex, so this cannot over-approximate.
std::vector<OneCell> predecessors(const Multigraph& mg, const OneCell& f, Mode mode);

// Breadth-first search over the undirected rewrite graph from f, restricted
// to terms with at most `bound` basic cells. Throws when `max_visited` nodes
// are expanded without an answer. Test-only oracle for decide_equal.
bool oracle_connected(const Multigraph& mg, const OneCell& f, const OneCell& g,
                      Mode mode, size_t bound, size_t max_visited = 2000000);

} // namespace graycal
