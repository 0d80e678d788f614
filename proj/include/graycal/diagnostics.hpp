// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace graycal {

struct Diagnostic {
  int line = 0; // 1-based; 0 when there is no source location
  int column = 0;
  std::string message;

  std::string render() const {
    std::ostringstream os;
    if (line > 0)
      os << line << ":" << column << ": ";
    os << message;
    return os.str();
  }
};

using Diagnostics = std::vector<Diagnostic>;

inline std::string render_diagnostics(const Diagnostics& ds) {
  std::string out;
  for (const auto& d : ds) {
    out += d.render();
    out += '\n';
  }
  return out;
}

// Precondition violations and checker failures. Parsers never throw; they
// accumulate Diagnostics instead.
struct GrayError : std::runtime_error {
  explicit GrayError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graycal
