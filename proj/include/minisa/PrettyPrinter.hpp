//===--- PrettyPrinter.hpp - Canonical MiniC source printer -----*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"

#include <string>

namespace minisa {

/// Prints an AST back to canonical MiniC source. Re-parsing the output
/// yields a structurally identical tree (node ids and locations may differ).
std::string prettyPrint(const AstNode *program);

/// Expression-only rendering, parenthesized as needed.
std::string printExpr(const AstNode *expr);

} // namespace minisa
