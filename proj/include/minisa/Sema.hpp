//===--- Sema.hpp - Type and scope checking for MiniC -----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"

#include <map>
#include <string>
#include <vector>

namespace minisa {

struct SymbolTableEntry {
  std::string name;
  const AstNode *declNode = nullptr;
  SemaType type;
  int scopeDepth = 0;
};

/// Runs type checking and scope checking over a parsed program, in place:
/// every VarRef and Call is bound to its declaration (innermost first,
/// shadowing allowed) and every expression receives a SemaType. Function
/// signatures are collected up front, so calls may reference functions
/// declared later in the file. Throws FrontendError on the first violation.
void analyzeSemantics(AstNode *program);

/// Intrinsic lookup by callee name; Intrinsic::None for user functions.
Intrinsic intrinsicByName(const std::string &name);

} // namespace minisa
