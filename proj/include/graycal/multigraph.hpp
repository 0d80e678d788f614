// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/diagnostics.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace graycal {

// A multiarrow has a finite input sequence (possibly empty) and one output.
struct ArrowSig {
  std::string name;
  std::vector<std::string> inputs;
  std::string output;

  bool operator==(const ArrowSig&) const = default;
};

// Objects plus multiarrows; the generating data of a free (braided) Gray
// monoid. Declaration order is preserved so serialisation is stable.
struct Multigraph {
  std::vector<std::string> objects;
  std::vector<ArrowSig> arrows;

  bool operator==(const Multigraph&) const = default;

  bool has_object(const std::string& name) const {
    return std::find(objects.begin(), objects.end(), name) != objects.end();
  }

  const ArrowSig* find_arrow(const std::string& name) const {
    for (const auto& a : arrows)
      if (a.name == name)
        return &a;
    return nullptr;
  }

  const ArrowSig& arrow(const std::string& name) const {
    if (const ArrowSig* a = find_arrow(name))
      return *a;
    throw GrayError("unknown arrow " + name);
  }

  Diagnostics validate() const {
    Diagnostics ds;
    for (size_t i = 0; i < objects.size(); ++i)
      for (size_t j = i + 1; j < objects.size(); ++j)
        if (objects[i] == objects[j])
          ds.push_back({0, 0, "duplicate object " + objects[i]});
    for (size_t i = 0; i < arrows.size(); ++i) {
      for (size_t j = i + 1; j < arrows.size(); ++j)
        if (arrows[i].name == arrows[j].name)
          ds.push_back({0, 0, "duplicate arrow " + arrows[i].name});
      for (const auto& in : arrows[i].inputs)
        if (!has_object(in))
          ds.push_back({0, 0, "unknown object " + in + " in arrow " + arrows[i].name});
      if (!has_object(arrows[i].output))
        ds.push_back({0, 0, "unknown object " + arrows[i].output + " in arrow " + arrows[i].name});
    }
    return ds;
  }
};

} // namespace graycal
