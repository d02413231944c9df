//===--- Desugar.hpp - Lowering to the MiniC core language ------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"

namespace minisa {

/// Rewrites a semantically valid program into the core form used by all
/// later phases, in place:
///
///   for (init; cond; step) body   =>   { init; while (cond) { body; step } }
///   x op= e                       =>   x = x op e
///   a[i] op= e                    =>   { int t = i; a[t] = a[t] op e; }
///
/// A missing for-condition becomes the literal 1. Fresh temporaries get
/// names that collide with nothing else in the program. The result is
/// re-type-checked before returning; programs containing none of these
/// constructs come back unchanged. Idempotent.
AstNode *desugar(AstNode *program, AstContext &ctx);

} // namespace minisa
