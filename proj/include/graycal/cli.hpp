// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graycal {

// The command-line front end. Exit codes: 0 success / equal / all pass,
// 1 not-equal / some check failed, 2 usage or parse error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace graycal
