//===--- Version.hpp --------------------------------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

namespace minisa {

inline constexpr const char *kToolVersion = "0.1.0";

} // namespace minisa
