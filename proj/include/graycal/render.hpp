// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/onecell.hpp"

#include <string>

namespace graycal {

// One text row per basic cell between a source and a target label line.
// Multiarrows are drawn as [name] spanning their input columns, crossings as
// a block-spanning X. Deterministic output.
std::string render_ascii(const Multigraph& mg, const OneCell& f);

} // namespace graycal
