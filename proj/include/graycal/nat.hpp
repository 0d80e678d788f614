// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace graycal {

// Wire widths and weights grow exponentially with term depth, so they are
// kept as arbitrary-precision naturals.
using Nat = boost::multiprecision::cpp_int;

} // namespace graycal
