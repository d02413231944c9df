//===--- SourceLocation.hpp - Positions in MiniC source files ---*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstdint>
#include <string>

namespace minisa {

/// A position in a source file. Lines and columns are 1-based, the byte
/// offset is 0-based.
struct SourceLocation {
  std::string file;
  int line = 1;
  int column = 1;
  std::int64_t offset = 0;

  bool operator==(const SourceLocation &other) const {
    return file == other.file && line == other.line && column == other.column;
  }

  std::string str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

} // namespace minisa
